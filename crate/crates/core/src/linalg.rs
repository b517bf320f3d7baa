//! Fixed-size 6×6 matrix and 6-vector arithmetic.
//!
//! Everything here lives on the stack; the game loop evaluates a handful of
//! these products per integration step.

use core::ops::{Add, AddAssign, Index, IndexMut, Mul, Neg, Sub};

use crate::error::{Error, Result};

/// A 6-vector ordered `[x, y, z, x', y', z']`.
pub type Vec6 = [f64; 6];

/// Dense 6×6 real matrix, row-major.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Mat6(pub [[f64; 6]; 6]);

impl Default for Mat6 {
    fn default() -> Self {
        Self::zeros()
    }
}

impl Mat6 {
    pub const fn zeros() -> Self {
        Mat6([[0.0; 6]; 6])
    }

    pub fn identity() -> Self {
        let mut m = Self::zeros();
        for i in 0..6 {
            m.0[i][i] = 1.0;
        }
        m
    }

    pub fn from_diagonal(d: &Vec6) -> Self {
        let mut m = Self::zeros();
        for i in 0..6 {
            m.0[i][i] = d[i];
        }
        m
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros();
        for i in 0..6 {
            for j in 0..6 {
                t.0[j][i] = self.0[i][j];
            }
        }
        t
    }

    pub fn scale(&self, s: f64) -> Self {
        let mut m = *self;
        for row in m.0.iter_mut() {
            for v in row.iter_mut() {
                *v *= s;
            }
        }
        m
    }

    pub fn mul_vec(&self, v: &Vec6) -> Vec6 {
        let mut out = [0.0; 6];
        for (o, row) in out.iter_mut().zip(self.0.iter()) {
            *o = row.iter().zip(v.iter()).map(|(a, b)| a * b).sum();
        }
        out
    }

    /// Largest absolute entry.
    pub fn max_abs(&self) -> f64 {
        self.0.iter().flat_map(|r| r.iter()).fold(0.0_f64, |m, v| m.max(libm::fabs(*v)))
    }

    /// Maximum absolute column sum.
    pub fn norm_1(&self) -> f64 {
        (0..6).map(|j| (0..6).map(|i| libm::fabs(self.0[i][j])).sum::<f64>()).fold(0.0, f64::max)
    }

    pub fn is_finite(&self) -> bool {
        self.0.iter().flat_map(|r| r.iter()).all(|v| v.is_finite())
    }

    /// LU factorisation with partial pivoting.
    pub fn lu(&self) -> Result<Lu6> {
        Lu6::new(self)
    }

    /// Inverse through LU; fails when a pivot vanishes.
    pub fn inverse(&self) -> Result<Mat6> {
        Ok(self.lu()?.inverse())
    }
}

impl Index<(usize, usize)> for Mat6 {
    type Output = f64;
    fn index(&self, (i, j): (usize, usize)) -> &f64 {
        &self.0[i][j]
    }
}

impl IndexMut<(usize, usize)> for Mat6 {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut f64 {
        &mut self.0[i][j]
    }
}

impl Mul for Mat6 {
    type Output = Mat6;
    fn mul(self, rhs: Mat6) -> Mat6 {
        &self * &rhs
    }
}

impl Mul<&Mat6> for &Mat6 {
    type Output = Mat6;
    fn mul(self, rhs: &Mat6) -> Mat6 {
        let mut out = Mat6::zeros();
        for i in 0..6 {
            for k in 0..6 {
                let a = self.0[i][k];
                if a == 0.0 {
                    continue;
                }
                for j in 0..6 {
                    out.0[i][j] += a * rhs.0[k][j];
                }
            }
        }
        out
    }
}

impl Add for Mat6 {
    type Output = Mat6;
    fn add(mut self, rhs: Mat6) -> Mat6 {
        self += rhs;
        self
    }
}

impl AddAssign for Mat6 {
    fn add_assign(&mut self, rhs: Mat6) {
        for i in 0..6 {
            for j in 0..6 {
                self.0[i][j] += rhs.0[i][j];
            }
        }
    }
}

impl Sub for Mat6 {
    type Output = Mat6;
    fn sub(self, rhs: Mat6) -> Mat6 {
        let mut out = self;
        for i in 0..6 {
            for j in 0..6 {
                out.0[i][j] -= rhs.0[i][j];
            }
        }
        out
    }
}

impl Neg for Mat6 {
    type Output = Mat6;
    fn neg(self) -> Mat6 {
        self.scale(-1.0)
    }
}

/// Packed LU factors `P·A = L·U` of a 6×6 matrix.
#[derive(Clone, Copy, Debug)]
pub struct Lu6 {
    lu: [[f64; 6]; 6],
    perm: [usize; 6],
    norm_1: f64,
}

impl Lu6 {
    pub fn new(a: &Mat6) -> Result<Self> {
        let mut lu = a.0;
        let mut perm = [0, 1, 2, 3, 4, 5];
        for k in 0..6 {
            let (piv, pmax) =
                (k..6)
                    .map(|i| (i, libm::fabs(lu[i][k])))
                    .fold((k, -1.0), |best, cur| if cur.1 > best.1 { cur } else { best });
            if pmax == 0.0 || !pmax.is_finite() {
                return Err(Error::Singular { condition: f64::INFINITY });
            }
            if piv != k {
                lu.swap(piv, k);
                perm.swap(piv, k);
            }
            let d = lu[k][k];
            for i in (k + 1)..6 {
                let m = lu[i][k] / d;
                lu[i][k] = m;
                for j in (k + 1)..6 {
                    lu[i][j] -= m * lu[k][j];
                }
            }
        }
        Ok(Self { lu, perm, norm_1: a.norm_1() })
    }

    pub fn solve_vec(&self, b: &Vec6) -> Vec6 {
        let mut x = [0.0; 6];
        for i in 0..6 {
            x[i] = b[self.perm[i]];
        }
        for i in 0..6 {
            for j in 0..i {
                x[i] -= self.lu[i][j] * x[j];
            }
        }
        for i in (0..6).rev() {
            for j in (i + 1)..6 {
                x[i] -= self.lu[i][j] * x[j];
            }
            x[i] /= self.lu[i][i];
        }
        x
    }

    /// Solves `A·X = B` column by column.
    pub fn solve(&self, b: &Mat6) -> Mat6 {
        let bt = b.transpose();
        let mut xt = Mat6::zeros();
        for (col, out) in bt.0.iter().zip(xt.0.iter_mut()) {
            *out = self.solve_vec(col);
        }
        xt.transpose()
    }

    pub fn inverse(&self) -> Mat6 {
        self.solve(&Mat6::identity())
    }

    /// 1-norm condition number `‖A‖₁·‖A⁻¹‖₁`.
    pub fn condition_1(&self) -> f64 {
        self.norm_1 * self.inverse().norm_1()
    }
}
