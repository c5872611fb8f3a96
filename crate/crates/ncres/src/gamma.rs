//! Explicit gamma-matrix representation, used only as an independent trace oracle.

use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::arith::GaussianRational;
use crate::error::CliffordError;

/// Dense square matrix over Gaussian rationals.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Matrix {
    dim: usize,
    data: Vec<GaussianRational>,
}

impl Matrix {
    pub fn zeros(dim: usize) -> Self {
        Self {
            dim,
            data: vec![GaussianRational::zero(); dim * dim],
        }
    }

    pub fn identity(dim: usize) -> Self {
        let mut m = Self::zeros(dim);
        for k in 0..dim {
            m.data[k * dim + k] = GaussianRational::one();
        }
        m
    }

    fn from_rows(rows: [[GaussianRational; 2]; 2]) -> Self {
        let [[a, b], [c, d]] = rows;
        Self {
            dim: 2,
            data: vec![a, b, c, d],
        }
    }

    pub fn get(&self, r: usize, c: usize) -> &GaussianRational {
        &self.data[r * self.dim + c]
    }

    pub fn kron(&self, other: &Matrix) -> Matrix {
        let n = self.dim * other.dim;
        let mut out = Matrix::zeros(n);
        for i in 0..self.dim {
            for j in 0..self.dim {
                let a = self.get(i, j);
                if a.is_zero() {
                    continue;
                }
                for k in 0..other.dim {
                    for l in 0..other.dim {
                        out.data[(i * other.dim + k) * n + j * other.dim + l] = a * other.get(k, l);
                    }
                }
            }
        }
        out
    }

    pub fn mul(&self, other: &Matrix) -> Matrix {
        let n = self.dim;
        let mut out = Matrix::zeros(n);
        for i in 0..n {
            for k in 0..n {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..n {
                    let b = other.get(k, j);
                    if !b.is_zero() {
                        out.data[i * n + j] += &(a * b);
                    }
                }
            }
        }
        out
    }

    pub fn add(&self, other: &Matrix) -> Matrix {
        Matrix {
            dim: self.dim,
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn scale(&self, c: &GaussianRational) -> Matrix {
        Matrix {
            dim: self.dim,
            data: self.data.iter().map(|a| a * c).collect(),
        }
    }

    pub fn trace(&self) -> GaussianRational {
        (0..self.dim).fold(GaussianRational::zero(), |acc, k| &acc + self.get(k, k))
    }
}

fn pauli() -> [Matrix; 3] {
    let z = GaussianRational::zero;
    let o = GaussianRational::one;
    let i = GaussianRational::i;
    [
        Matrix::from_rows([[z(), o()], [o(), z()]]),
        Matrix::from_rows([[z(), -i()], [i(), z()]]),
        Matrix::from_rows([[o(), z()], [z(), -o()]]),
    ]
}

/// `2m+1` matrices of size `2^m` with `g_a g_b + g_b g_a = -2 delta_ab`.
pub fn gamma_matrices(m: u32) -> Result<Vec<Matrix>, CliffordError> {
    let [s1, s2, s3] = pauli();
    let mut herm = vec![Matrix::identity(1)];
    for level in 0..m {
        let id = Matrix::identity(1 << level);
        let mut next: Vec<Matrix> = herm.iter().map(|g| s1.kron(g)).collect();
        next.push(s2.kron(&id));
        next.push(s3.kron(&id));
        herm = next;
    }
    let gammas: Vec<Matrix> = herm
        .iter()
        .map(|g| g.scale(&GaussianRational::i()))
        .collect();
    let dim = 1usize << m;
    let minus_two = Matrix::identity(dim).scale(&GaussianRational::int(-2));
    for (a, ga) in gammas.iter().enumerate() {
        for (b, gb) in gammas.iter().enumerate() {
            let anti = ga.mul(gb).add(&gb.mul(ga));
            let want = if a == b {
                minus_two.clone()
            } else {
                Matrix::zeros(dim)
            };
            if anti != want {
                return Err(CliffordError::GammaConstruction(m));
            }
        }
    }
    Ok(gammas)
}

/// `tr(c(v1) ... c(vk)) / 2^m` for concrete vectors in `R^{2m+1}`.
pub fn gamma_oracle(m: u32, word: &[Vec<BigRational>]) -> Result<GaussianRational, CliffordError> {
    let n = 2 * m as usize + 1;
    if !(1..=4).contains(&m) || word.iter().any(|v| v.len() != n) {
        return Err(CliffordError::GammaShape {
            m,
            len: word.first().map_or(n, Vec::len),
        });
    }
    let gammas = gamma_matrices(m)?;
    let dim = 1usize << m;
    let mut acc = Matrix::identity(dim);
    for v in word {
        let cv = v
            .iter()
            .zip(&gammas)
            .filter(|(c, _)| !c.is_zero())
            .fold(Matrix::zeros(dim), |s, (c, g)| {
                s.add(&g.scale(&GaussianRational::real(c.clone())))
            });
        acc = acc.mul(&cv);
    }
    acc.trace()
        .checked_div(&GaussianRational::int(dim as i64))
        .map_err(|_| CliffordError::GammaConstruction(m))
}

/// Euclidean pairing of two concrete vectors.
pub fn euclidean(a: &[BigRational], b: &[BigRational]) -> GaussianRational {
    GaussianRational::real(
        a.iter()
            .zip(b)
            .map(|(x, y)| x * y)
            .fold(BigRational::zero(), |s, t| s + t),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::ratio;

    fn e(n: usize, k: usize) -> Vec<BigRational> {
        (0..n).map(|j| ratio(i64::from(j == k), 1)).collect()
    }

    #[test]
    fn construction_passes_self_check() {
        for m in 1..=4 {
            assert_eq!(gamma_matrices(m).unwrap().len(), 2 * m as usize + 1);
        }
    }

    #[test]
    fn empty_word_is_normalized() {
        assert_eq!(gamma_oracle(2, &[]).unwrap(), GaussianRational::one());
    }

    #[test]
    fn distinct_pair_is_traceless() {
        for m in 1..=3 {
            let n = 2 * m as usize + 1;
            assert!(gamma_oracle(m, &[e(n, 0), e(n, 1)]).unwrap().is_zero());
        }
    }

    #[test]
    fn alternating_pair() {
        let n = 5;
        let w = [e(n, 0), e(n, 1), e(n, 0), e(n, 1)];
        assert_eq!(gamma_oracle(2, &w).unwrap(), GaussianRational::int(-1));
    }

    #[test]
    fn top_element_has_trace_in_three_dimensions() {
        // the volume element is central in odd dimension, so its trace need not vanish
        let w = [e(3, 0), e(3, 1), e(3, 2)];
        assert_eq!(gamma_oracle(1, &w).unwrap(), GaussianRational::one());
    }
}
