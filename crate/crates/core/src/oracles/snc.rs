//! Direct count of the monomial basis of `F_p O(*D)` for `D = x_1 ⋯ x_d`.
//!
//! The Laurent monomial `x^b` belongs to `F_p` iff `b_i >= 0` for `i > d`
//! and `Σ_{i <= d} min(b_i, -1) >= -(d + p)`.

/// Parameters selecting the exponent vectors counted by [`snc_fp_dimension`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct MonomialConstraint {
    pub n: usize,
    pub d: usize,
    pub p: usize,
}

impl MonomialConstraint {
    pub fn admits(&self, b: &[i64]) -> bool {
        let bound = -((self.d + self.p) as i64);
        b[self.d..].iter().all(|&x| x >= 0) && b[..self.d].iter().map(|&x| x.min(-1)).sum::<i64>() >= bound
    }

    fn lower(&self, i: usize) -> i64 {
        if i < self.d {
            -((self.d + self.p) as i64)
        } else {
            0
        }
    }

    /// Range for `b_i` when coordinates `i..` must sum to `remaining`: each
    /// later coordinate is at least its lower bound, which caps `b_i`.
    fn window(&self, i: usize, remaining: i64) -> (i64, i64) {
        let rest: i64 = (i + 1..self.n).map(|k| self.lower(k)).sum();
        (self.lower(i), remaining - rest)
    }

    /// Enumerates all admissible `b` with `Σ b_i = total`.
    pub fn count(&self, total: i64) -> u64 {
        let mut b = vec![0i64; self.n];
        self.walk(0, total, &mut b)
    }

    fn walk(&self, i: usize, remaining: i64, b: &mut Vec<i64>) -> u64 {
        let (lo, hi) = self.window(i, remaining);
        if i + 1 == self.n {
            if remaining < lo || remaining > hi {
                return 0;
            }
            b[i] = remaining;
            return u64::from(self.admits(b));
        }
        let mut c = 0;
        for v in lo..=hi {
            b[i] = v;
            c += self.walk(i + 1, remaining - v, b);
        }
        c
    }
}

/// Number of Laurent monomials of total degree `total` in `F_p O(*D)`.
pub fn snc_fp_dimension(n: usize, d: usize, p: usize, total: i64) -> u64 {
    assert!(1 <= d && d <= n, "need 1 <= d <= n");
    MonomialConstraint { n, d, p }.count(total)
}

/// `dim I_p(D)_j = dim F_p_{j - d(p+1)}` for `0 <= j <= j_max`.
pub fn snc_ideal_dims(n: usize, d: usize, p: usize, j_max: usize) -> Vec<u64> {
    let shift = (d * (p + 1)) as i64;
    (0..=j_max as i64).map(|j| snc_fp_dimension(n, d, p, j - shift)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn one_variable() {
        for p in 0..4 {
            let k = -(p as i64 + 1);
            assert_eq!(snc_fp_dimension(1, 1, p, k - 1), 0);
            for j in k..k + 6 {
                assert_eq!(snc_fp_dimension(1, 1, p, j), 1);
            }
            assert_eq!(snc_ideal_dims(1, 1, p, 8), vec![1; 9]);
        }
    }

    #[test]
    fn two_crossing_lines() {
        assert_eq!(snc_fp_dimension(2, 2, 0, -2), 1);
        assert_eq!(snc_fp_dimension(2, 2, 0, -3), 0);
        assert_eq!(snc_fp_dimension(2, 2, 1, -3), 2);
        assert_eq!(snc_ideal_dims(2, 2, 1, 1)[1], 2);
    }

    #[test]
    fn smooth_divisor_in_plane() {
        assert_eq!(snc_ideal_dims(2, 1, 0, 4), vec![1, 2, 3, 4, 5]);
    }
}
