use super::complex::build_bar_complex;
use super::presets::PresetRegistry;
use crate::error::{Error, Result};
use crate::exact::{
    series_of_polynomial_algebra, series_of_tensor_algebra, DegreeRule, DimensionSeries,
};
use crate::report::Report;

/// Presets accepted by [`kuenneth_preset_check`].
pub const KUENNETH_PRESETS: [&str; 2] = ["SU/SO", "CP-loop"];

fn bar_series(preset: &str, cap: u32) -> Result<DimensionSeries> {
    let a = PresetRegistry::builtin().get(preset)?.instantiate(cap)?;
    Ok(build_bar_complex(&a, cap)?.homology_dimensions().series)
}

fn compare(report: &mut Report, lhs: &DimensionSeries, rhs: &DimensionSeries, what: &str) {
    let diff = lhs.first_difference(rhs);
    report.check(diff.is_none(), || match diff {
        Some(d) => format!(
            "{what}: degree {d}: bar homology {} vs expected {}",
            lhs.get(d).unwrap_or(0),
            rhs.get(d).unwrap_or(0)
        ),
        None => String::new(),
    });
}

/// Compares bar homology of a preset with the series predicted by a
/// collapsing Eilenberg–Moore / Künneth argument.
///
/// `SU/SO`: `Tor` of the exterior algebra on degrees `4k+1, k>=1` against
/// the polynomial algebra on degrees `4k+2, k>=1`. The reading with `k>=0`
/// is evaluated too and its disagreement is recorded as a note.
///
/// `CP-loop`: `Tor` of the square-zero algebra on degrees `2k, k>=1`
/// against the tensor algebra on degrees `2k+1, k>=1`.
pub fn kuenneth_preset_check(preset: &str, cap: u32) -> Result<Report> {
    let mut report = Report::new(format!("kuenneth[{preset}] cap {cap}"));
    let degrees = |rule: &str| -> Vec<u32> {
        rule.parse::<DegreeRule>()
            .expect("fixed rule parses")
            .degrees(u64::from(cap))
    };
    match preset {
        "SU/SO" => {
            let lhs = bar_series(preset, cap)?;
            let rhs = series_of_polynomial_algebra(&degrees("4k+2,k>=1"), cap as usize)?;
            compare(&mut report, &lhs, &rhs, "generators 4k+2, k>=1");
            let alt = series_of_polynomial_algebra(&degrees("4k+2,k>=0"), cap as usize)?;
            match lhs.first_difference(&alt) {
                Some(d) => report.note(format!(
                    "reading k>=0 (generator in degree 2) disagrees first in degree {d}: {} vs {}",
                    lhs.get(d).unwrap_or(0),
                    alt.get(d).unwrap_or(0)
                )),
                None => report.note("reading k>=0 agrees within this cap"),
            }
        }
        "CP-loop" => {
            let lhs = bar_series(preset, cap)?;
            let rhs = series_of_tensor_algebra(&degrees("2k+1,k>=1"), cap as usize)?;
            compare(&mut report, &lhs, &rhs, "tensor algebra on 2k+1, k>=1");
        }
        other => return Err(Error::unknown("kuenneth preset", other)),
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn su_so_matches_from_degree_six() {
        let r = kuenneth_preset_check("SU/SO", 14).unwrap();
        assert!(r.passed(), "{r}");
        assert!(r.notes[0].contains("degree 2"), "{r}");
    }

    #[test]
    fn cp_loop() {
        let r = kuenneth_preset_check("CP-loop", 10).unwrap();
        assert!(r.passed(), "{r}");
        let s = bar_series("CP-loop", 10).unwrap();
        assert_eq!(
            s.nonnegative_coefficients(),
            [1, 0, 0, 1, 0, 1, 1, 1, 2, 2, 3]
        );
    }

    #[test]
    fn unknown_preset() {
        assert!(matches!(
            kuenneth_preset_check("E(odd)", 6),
            Err(Error::Unknown { .. })
        ));
    }
}
