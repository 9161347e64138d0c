use super::LaurentPoly;
use crate::braidgen::{BraidWord, Sign};

/// Square matrix over `Z[t, t^-1]`, row-major.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BurauMatrix {
    pub dim: usize,
    pub entries: Vec<Vec<LaurentPoly>>,
}

impl BurauMatrix {
    pub fn identity(dim: usize) -> Self {
        let entries = (0..dim)
            .map(|i| (0..dim).map(|j| if i == j { LaurentPoly::one() } else { LaurentPoly::zero() }).collect())
            .collect();
        Self { dim, entries }
    }

    pub fn get(&self, i: usize, j: usize) -> &LaurentPoly {
        &self.entries[i][j]
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        let mut out = Self::identity(self.dim);
        for i in 0..self.dim {
            for j in 0..self.dim {
                out.entries[i][j] = (0..self.dim)
                    .map(|k| &self.entries[i][k] * &rhs.entries[k][j])
                    .fold(LaurentPoly::zero(), |a, b| a + b);
            }
        }
        out
    }

    /// Image of `σ_g^±1`, generators 1-based. It differs from the identity
    /// only in row `g-1`.
    pub fn generator(dim: usize, g: usize, sign: Sign) -> Self {
        let mut m = Self::identity(dim);
        for (j, v) in generator_row(g, sign) {
            if j < dim {
                m.entries[g - 1][j] = v;
            }
        }
        m
    }

    /// `self · gen(g, sign)` touching only the affected columns.
    fn apply(&mut self, g: usize, sign: Sign) {
        let row = g - 1;
        let dim = self.dim;
        for r in 0..dim {
            let pivot = self.entries[r][row].clone();
            if pivot.is_zero() {
                continue;
            }
            for (j, v) in generator_row(g, sign) {
                if j >= dim {
                    continue;
                }
                let term = &pivot * &v;
                if j == row {
                    self.entries[r][j] = term;
                } else {
                    self.entries[r][j] = &self.entries[r][j] + &term;
                }
            }
        }
    }
}

/// Nonzero entries `(column, value)` of row `g-1`. For the last generator
/// column `g` lies outside the matrix; callers skip it.
fn generator_row(g: usize, sign: Sign) -> Vec<(usize, LaurentPoly)> {
    let t = |e: i64| LaurentPoly::monomial(1, e);
    let (left, diag, right) = match sign {
        Sign::Positive => (t(1), -&t(1), t(0)),
        Sign::Negative => (t(0), -&t(-1), t(-1)),
    };
    let i = g - 1;
    let mut row = vec![(i, diag), (i + 1, right)];
    if i > 0 {
        row.push((i - 1, left));
    }
    row
}

/// Reduced Burau image of `w`: product of generator images in word order.
pub fn burau_reduced(w: &BraidWord) -> BurauMatrix {
    let dim = w.strands.saturating_sub(1) as usize;
    let mut m = BurauMatrix::identity(dim);
    for l in &w.letters {
        m.apply(l.generator as usize, l.exponent);
    }
    m
}

/// Determinant by fraction-free elimination; every division is exact.
pub fn determinant(m: &BurauMatrix) -> LaurentPoly {
    let n = m.dim;
    if n == 0 {
        return LaurentPoly::one();
    }
    let mut a = m.entries.clone();
    let mut prev = LaurentPoly::one();
    let mut negate = false;
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&r| !a[r][k].is_zero()) {
                Some(r) => {
                    a.swap(k, r);
                    negate = !negate;
                }
                None => return LaurentPoly::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &(&a[i][j] * &a[k][k]) - &(&a[i][k] * &a[k][j]);
                a[i][j] = num.div_exact(&prev).expect("Bareiss division is exact");
            }
        }
        prev = a[k][k].clone();
    }
    let det = a[n - 1][n - 1].clone();
    if negate { -det } else { det }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t(e: i64) -> LaurentPoly {
        LaurentPoly::monomial(1, e)
    }

    #[test]
    fn small_images() {
        let empty = BraidWord::new(3, vec![]).unwrap();
        assert_eq!(burau_reduced(&empty), BurauMatrix::identity(2));
        let s1 = BraidWord::from_signed(2, &[1]).unwrap();
        assert_eq!(*burau_reduced(&s1).get(0, 0), -&t(1));
        let s3 = BraidWord::from_signed(2, &[1, 1, 1]).unwrap();
        assert_eq!(*burau_reduced(&s3).get(0, 0), -&t(3));
    }

    #[test]
    fn sparse_update_matches_full_product() {
        let w = BraidWord::from_signed(4, &[1, -2, 3, 2, -1, -3, 2]).unwrap();
        let full = w.letters.iter().fold(BurauMatrix::identity(3), |m, l| {
            m.mul(&BurauMatrix::generator(3, l.generator as usize, l.exponent))
        });
        assert_eq!(burau_reduced(&w), full);
    }

    #[test]
    fn inverse_and_braid_relation() {
        for g in 1..=3 {
            let p = BurauMatrix::generator(3, g, Sign::Positive);
            let n = BurauMatrix::generator(3, g, Sign::Negative);
            assert_eq!(p.mul(&n), BurauMatrix::identity(3));
        }
        let a = BraidWord::from_signed(3, &[1, 2, 1]).unwrap();
        let b = BraidWord::from_signed(3, &[2, 1, 2]).unwrap();
        assert_eq!(burau_reduced(&a), burau_reduced(&b));
    }

    #[test]
    fn determinant_is_unit_monomial() {
        let w = BraidWord::from_signed(4, &[1, -2, 3, 3, -1, 2]).unwrap();
        let d = determinant(&burau_reduced(&w));
        assert_eq!(d.terms().count(), 1);
        assert_eq!(d, (-&t(1)).pow(2));
    }
}
