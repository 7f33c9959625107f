use std::fmt;
use std::str::FromStr;

use super::{Arrangement, ArrangementError, Hyperplane};

/// Builtin arrangement families, written `name:params` on the command line.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Family {
    /// Coordinate hyperplanes `x_i = 0` in dimension `n`.
    Boolean(usize),
    /// `x_i = x_j` for `i < j` in dimension `n`.
    Braid(usize),
    /// `d` hyperplanes in dimension `n` with normals on the moment curve.
    Generic(usize, usize),
    /// `d` distinct lines through the origin of the plane.
    ConcurrentLines(usize),
}

fn unit(n: usize, i: usize) -> Vec<i64> {
    let mut v = vec![0; n];
    v[i] = 1;
    v
}

/// Constructs a builtin family member.
pub fn builtin_family(family: Family) -> Result<Arrangement, ArrangementError> {
    let bad = |msg: String| Err(ArrangementError::InvalidFamily(msg));
    let rows: Vec<Vec<i64>> = match family {
        Family::Boolean(n) | Family::Braid(n) | Family::Generic(n, _) if n == 0 => {
            return bad(format!("{family}: dimension must be positive"));
        }
        Family::Boolean(n) => (0..n).map(|i| unit(n, i)).collect(),
        Family::Braid(n) => {
            let mut rows = Vec::new();
            for i in 0..n {
                for j in i + 1..n {
                    let mut v = vec![0; n];
                    v[i] = 1;
                    v[j] = -1;
                    rows.push(v);
                }
            }
            rows
        }
        Family::Generic(_, 0) => return bad(format!("{family}: need at least one hyperplane")),
        Family::Generic(1, d) if d > 1 => return bad(format!("{family}: a line has only one hyperplane")),
        Family::Generic(n, d) => (1..=d as i64)
            .map(|a| (0..n as u32).map(|k| a.pow(k)).collect())
            .collect(),
        Family::ConcurrentLines(0) => return bad(format!("{family}: need at least one line")),
        Family::ConcurrentLines(d) => {
            let mut rows = vec![vec![1, 0]];
            if d > 1 {
                rows.push(vec![0, 1]);
            }
            rows.extend((1..d as i64 - 1).map(|k| vec![1, k]));
            rows
        }
    };
    let n = match family {
        Family::Boolean(n) | Family::Braid(n) | Family::Generic(n, _) => n,
        Family::ConcurrentLines(_) => 2,
    };
    let hs = rows.iter().map(|r| Hyperplane::from_integers(r)).collect::<Result<_, _>>()?;
    Arrangement::new(n, hs)
}

/// Parses `boolean:3`, `braid:4`, `generic:3,5` or `concurrent_lines:4`.
pub fn parse_family_spec(spec: &str) -> Result<Family, ArrangementError> {
    spec.parse()
}

impl FromStr for Family {
    type Err = ArrangementError;

    fn from_str(spec: &str) -> Result<Self, Self::Err> {
        let bad = || ArrangementError::InvalidFamily(spec.to_string());
        let (name, params) = spec.split_once(':').ok_or_else(bad)?;
        let nums: Vec<usize> = params
            .split(',')
            .map(|p| p.trim().parse::<usize>().map_err(|_| bad()))
            .collect::<Result<_, _>>()?;
        match (name.trim(), nums.as_slice()) {
            ("boolean", [n]) => Ok(Family::Boolean(*n)),
            ("braid", [n]) => Ok(Family::Braid(*n)),
            ("generic", [n, d]) => Ok(Family::Generic(*n, *d)),
            ("concurrent_lines", [d]) => Ok(Family::ConcurrentLines(*d)),
            _ => Err(bad()),
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Family::Boolean(n) => write!(f, "boolean:{n}"),
            Family::Braid(n) => write!(f, "braid:{n}"),
            Family::Generic(n, d) => write!(f, "generic:{n},{d}"),
            Family::ConcurrentLines(d) => write!(f, "concurrent_lines:{d}"),
        }
    }
}
