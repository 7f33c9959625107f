use num_rational::BigRational;
use num_traits::Zero;

use super::{canonicalize_hyperplane, Arrangement, ArrangementError};

/// Splits `arr` at hyperplane `h0` into the deletion `A'` (same ambient
/// space, `h0` removed) and the restriction `A''` (distinct traces on `h0`,
/// written in coordinates of an explicit rational basis of `h0`).
pub fn deletion_restriction(arr: &Arrangement, h0: usize) -> Result<(Arrangement, Arrangement), ArrangementError> {
    let d = arr.d();
    if h0 >= d {
        return Err(ArrangementError::InvalidIndex { index: h0, d });
    }
    let n = arr.n();
    let rest: Vec<_> = arr.hyperplanes().iter().enumerate().filter(|(i, _)| *i != h0).map(|(_, h)| h.clone()).collect();

    // basis of h0 = ker(h): v_j = e_j - (h_j / h_p) e_p for j != p
    let h = arr.hyperplanes()[h0].normal_rational();
    let p = h.iter().position(|x| !x.is_zero()).expect("normals are nonzero");
    let mut traces = Vec::new();
    for hp in &rest {
        let a = hp.normal_rational();
        let coords: Vec<BigRational> =
            (0..n).filter(|&j| j != p).map(|j| &a[j] - &a[p] * &h[j] / &h[p]).collect();
        let tr = canonicalize_hyperplane(&coords).expect("distinct hyperplanes have a nonzero trace");
        if !traces.contains(&tr) {
            traces.push(tr);
        }
    }

    let deletion = Arrangement::new(n, rest)?;
    let restriction = Arrangement::new(n - 1, traces)?;
    Ok((deletion, restriction))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arrangement::Hyperplane;

    #[test]
    fn boolean_two() {
        let arr = Arrangement::from_integer_rows(2, &[&[1, 0], &[0, 1]]).unwrap();
        let (del, res) = deletion_restriction(&arr, 0).unwrap();
        assert_eq!(del, Arrangement::from_integer_rows(2, &[&[0, 1]]).unwrap());
        assert_eq!(res, Arrangement::new(1, vec![Hyperplane::from_integers(&[1]).unwrap()]).unwrap());
    }

    #[test]
    fn concurrent_traces_merge() {
        let arr = Arrangement::from_integer_rows(2, &[&[1, 0], &[0, 1], &[1, 1]]).unwrap();
        for h0 in 0..3 {
            let (del, res) = deletion_restriction(&arr, h0).unwrap();
            assert_eq!(del.d(), 2);
            assert_eq!((res.n(), res.d()), (1, 1));
        }
    }

    #[test]
    fn single_hyperplane() {
        let arr = Arrangement::from_integer_rows(3, &[&[1, 2, 3]]).unwrap();
        let (del, res) = deletion_restriction(&arr, 0).unwrap();
        assert_eq!(del, Arrangement::empty(3));
        assert_eq!(res, Arrangement::empty(2));
    }

    #[test]
    fn bad_index() {
        let arr = Arrangement::from_integer_rows(2, &[&[1, 0]]).unwrap();
        assert_eq!(deletion_restriction(&arr, 1).unwrap_err(), ArrangementError::InvalidIndex { index: 1, d: 1 });
    }
}
