use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// An arithmetic progression of positive degrees `slope·k + offset` for
/// `k_min <= k (<= k_max)`, truncated at a cap when materialized.
///
/// Text forms: `odd`, `even`, `odd>=3`, `even>=2`, `4k+1`, `4k+1,k>=1`,
/// `2k+1,k=0..3`, or an explicit list `1,3,5`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum DegreeRule {
    Progression {
        slope: u32,
        offset: i64,
        k_min: i64,
        k_max: Option<i64>,
    },
    Explicit(Vec<u32>),
}

impl DegreeRule {
    pub fn explicit(degrees: Vec<u32>) -> Result<Self> {
        if degrees.contains(&0) {
            return Err(Error::Validation(
                "generator degrees must be at least 1".into(),
            ));
        }
        Ok(DegreeRule::Explicit(degrees))
    }

    /// All degrees `<= cap`, as a multiset in increasing order.
    pub fn degrees(&self, cap: u64) -> Vec<u32> {
        match self {
            DegreeRule::Explicit(v) => {
                let mut v: Vec<u32> = v.iter().copied().filter(|&d| u64::from(d) <= cap).collect();
                v.sort_unstable();
                v
            }
            DegreeRule::Progression {
                slope,
                offset,
                k_min,
                k_max,
            } => {
                let mut out = Vec::new();
                let mut k = *k_min;
                loop {
                    if k_max.is_some_and(|m| k > m) {
                        break;
                    }
                    let d = i64::from(*slope) * k + offset;
                    if d > cap as i64 {
                        break;
                    }
                    if d >= 1 {
                        out.push(d as u32);
                    }
                    if *slope == 0 {
                        break;
                    }
                    k += 1;
                }
                out
            }
        }
    }

    /// Generator counts indexed by degree, `0..=cap`.
    pub fn counts(&self, cap: u64) -> Vec<u64> {
        let mut c = vec![0u64; cap as usize + 1];
        for d in self.degrees(cap) {
            c[d as usize] += 1;
        }
        c
    }

    fn validate(self) -> Result<Self> {
        if let DegreeRule::Progression {
            slope,
            offset,
            k_min,
            ..
        } = &self
        {
            let first = i64::from(*slope) * k_min + offset;
            if first < 1 {
                return Err(Error::Validation(format!(
                    "rule `{self}` produces degrees below 1"
                )));
            }
        }
        Ok(self)
    }
}

fn parse_int(s: &str, whole: &str) -> Result<i64> {
    s.trim()
        .parse()
        .map_err(|_| Error::Parse(format!("invalid degree rule `{whole}`")))
}

fn parse_progression(body: &str, whole: &str) -> Result<(u32, i64)> {
    // `ak+b`, `ak-b`, `ak`, `k+b`
    let body = body.replace(' ', "");
    let kpos = body
        .find('k')
        .ok_or_else(|| Error::Parse(format!("invalid degree rule `{whole}`")))?;
    let slope_src = &body[..kpos];
    let slope = if slope_src.is_empty() {
        1
    } else {
        parse_int(slope_src, whole)?
    };
    let rest = &body[kpos + 1..];
    let offset = if rest.is_empty() {
        0
    } else if let Some(r) = rest.strip_prefix('+') {
        parse_int(r, whole)?
    } else if rest.starts_with('-') {
        parse_int(rest, whole)?
    } else {
        return Err(Error::Parse(format!("invalid degree rule `{whole}`")));
    };
    let slope =
        u32::try_from(slope).map_err(|_| Error::Parse(format!("negative slope in `{whole}`")))?;
    Ok((slope, offset))
}

impl FromStr for DegreeRule {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let src = s.trim().replace('≥', ">=");
        let (head, tail) = match src.split_once(',') {
            Some((h, t)) if h.contains('k') || h.starts_with("odd") || h.starts_with("even") => {
                (h.trim().to_string(), Some(t.trim().to_string()))
            }
            _ => (src.clone(), None),
        };
        if head.is_empty() {
            return Ok(DegreeRule::Explicit(Vec::new()));
        }
        if head
            .chars()
            .all(|c| c.is_ascii_digit() || c == ',' || c == ' ')
        {
            let degrees = head
                .split(',')
                .map(|p| {
                    p.trim()
                        .parse::<u32>()
                        .map_err(|_| Error::Parse(format!("invalid degree list `{s}`")))
                })
                .collect::<Result<Vec<_>>>()?;
            return DegreeRule::explicit(degrees);
        }
        let (slope, offset, mut k_min, mut k_max) = if let Some(r) = head.strip_prefix("odd") {
            let lo = match r.strip_prefix(">=") {
                Some(n) => parse_int(n, s)?,
                None if r.is_empty() => 1,
                None => return Err(Error::Parse(format!("invalid degree rule `{s}`"))),
            };
            (
                2,
                1,
                (lo - 1).div_euclid(2) + i64::from((lo - 1).rem_euclid(2) != 0),
                None,
            )
        } else if let Some(r) = head.strip_prefix("even") {
            let lo = match r.strip_prefix(">=") {
                Some(n) => parse_int(n, s)?,
                None if r.is_empty() => 2,
                None => return Err(Error::Parse(format!("invalid degree rule `{s}`"))),
            };
            (
                2,
                0,
                lo.div_euclid(2) + i64::from(lo.rem_euclid(2) != 0),
                None,
            )
        } else {
            let (slope, offset) = parse_progression(&head, s)?;
            (slope, offset, 0, None)
        };
        if let Some(t) = tail {
            let t = t.replace(' ', "");
            if let Some(n) = t.strip_prefix("k>=") {
                k_min = parse_int(n, s)?;
            } else if let Some(r) = t.strip_prefix("k=") {
                let (a, b) = r
                    .split_once("..")
                    .ok_or_else(|| Error::Parse(format!("invalid k range in `{s}`")))?;
                k_min = parse_int(a, s)?;
                k_max = Some(parse_int(b, s)?);
            } else {
                return Err(Error::Parse(format!("invalid degree rule `{s}`")));
            }
        }
        DegreeRule::Progression {
            slope,
            offset,
            k_min,
            k_max,
        }
        .validate()
    }
}

impl fmt::Display for DegreeRule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DegreeRule::Explicit(v) => {
                let s: Vec<String> = v.iter().map(u32::to_string).collect();
                f.write_str(&s.join(","))
            }
            DegreeRule::Progression {
                slope,
                offset,
                k_min,
                k_max,
            } => {
                write!(f, "{slope}k")?;
                if *offset > 0 {
                    write!(f, "+{offset}")?;
                } else if *offset < 0 {
                    write!(f, "{offset}")?;
                }
                match k_max {
                    Some(m) => write!(f, ",k={k_min}..{m}"),
                    None => write!(f, ",k>={k_min}"),
                }
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn degs(s: &str, cap: u64) -> Vec<u32> {
        s.parse::<DegreeRule>().unwrap().degrees(cap)
    }

    #[test]
    fn rule_forms() {
        assert_eq!(degs("odd>=3", 12), [3, 5, 7, 9, 11]);
        assert_eq!(degs("odd", 6), [1, 3, 5]);
        assert_eq!(degs("even>=2", 8), [2, 4, 6, 8]);
        assert_eq!(degs("even>=3", 8), [4, 6, 8]);
        assert_eq!(degs("4k+1,k>=1", 14), [5, 9, 13]);
        assert_eq!(degs("4k+1", 10), [1, 5, 9]);
        assert_eq!(degs("4k+1, k=1..3", 100), [5, 9, 13]);
        assert_eq!(degs("4k+1,k≥1", 9), [5, 9]);
        assert_eq!(degs("2k+1", 5), [1, 3, 5]);
        assert_eq!(degs("1,1", 5), [1, 1]);
        assert_eq!(degs("3,1,9", 5), [1, 3]);
        assert_eq!(degs("", 5), Vec::<u32>::new());
    }

    #[test]
    fn rejects_bad_rules() {
        assert!("4k-1".parse::<DegreeRule>().is_err());
        assert!("1,0".parse::<DegreeRule>().is_err());
        assert!("k^2".parse::<DegreeRule>().is_err());
        assert!("odd>3".parse::<DegreeRule>().is_err());
        assert!("2k+1,j>=2".parse::<DegreeRule>().is_err());
    }

    #[test]
    fn display_round_trip() {
        for s in ["4k+1,k>=1", "2k+1,k=0..3", "1,3,5"] {
            let r: DegreeRule = s.parse().unwrap();
            assert_eq!(r.to_string().parse::<DegreeRule>().unwrap(), r);
        }
    }
}
