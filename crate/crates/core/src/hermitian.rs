//! Exact Hermitian matrices: determinants, characteristic polynomials,
//! principal submatrices, the bordered determinant identity and the
//! Cauchy interlacing check.
//!
//! Characteristic polynomials are monic, `det(xI - A)`. The other common
//! convention, `|A - xI|`, differs by `(-1)^n`.

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::interlace::{interlaces_by_roots, InterlaceReport};
pub use crate::gaussian::GaussianRational;
use crate::poly::{lin_comb, Polynomial};
use crate::rational::{self, format_rational, parse_rational, Rational};
use crate::roots::{isolate_roots, refine_to, RootIntervals};

/// A square matrix of Gaussian rationals, row-major.
pub type Matrix = Vec<Vec<GaussianRational>>;

/// Default isolating-interval width for eigenvalues, `2^-20`.
pub fn default_width() -> Rational {
    Rational::new(BigInt::one(), BigInt::from(1u64 << 20))
}

fn check_square(m: &[Vec<GaussianRational>]) -> Result<usize> {
    let n = m.len();
    for (row, r) in m.iter().enumerate() {
        if r.len() != n {
            return Err(Error::NotSquare { row, len: r.len(), n });
        }
    }
    Ok(n)
}

/// First `(i, j)`, `i <= j`, with `m[i][j] != conj(m[j][i])`.
fn hermitian_violation(m: &[Vec<GaussianRational>]) -> Option<(usize, usize)> {
    let n = m.len();
    (0..n)
        .flat_map(|i| (i..n).map(move |j| (i, j)))
        .find(|&(i, j)| m[i][j] != m[j][i].conj())
}

pub fn is_hermitian(m: &[Vec<GaussianRational>]) -> Result<bool> {
    check_square(m)?;
    Ok(hermitian_violation(m).is_none())
}

/// A validated Hermitian matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HermitianMatrix {
    entries: Matrix,
}

impl HermitianMatrix {
    pub fn new(entries: Matrix) -> Result<Self> {
        check_square(&entries)?;
        if let Some((i, j)) = hermitian_violation(&entries) {
            return Err(Error::NotHermitian { i, j });
        }
        Ok(HermitianMatrix { entries })
    }

    /// Real symmetric matrix from integer rows.
    pub fn from_real_rows(rows: &[&[i64]]) -> Result<Self> {
        Self::new(
            rows.iter()
                .map(|r| r.iter().map(|&x| GaussianRational::from_ints(x, 0)).collect())
                .collect(),
        )
    }

    pub fn diagonal(diag: &[Rational]) -> Self {
        let n = diag.len();
        let mut entries = vec![vec![GaussianRational::zero(); n]; n];
        for (i, d) in diag.iter().enumerate() {
            entries[i][i] = GaussianRational::real(d.clone());
        }
        HermitianMatrix { entries }
    }

    pub fn n(&self) -> usize {
        self.entries.len()
    }

    pub fn entries(&self) -> &Matrix {
        &self.entries
    }

    pub fn get(&self, i: usize, j: usize) -> &GaussianRational {
        &self.entries[i][j]
    }

    /// Adds `delta` to diagonal entry `k`; the result stays Hermitian.
    pub fn shift_diagonal(&self, k: usize, delta: &Rational) -> Self {
        let mut entries = self.entries.clone();
        entries[k][k].re += delta;
        HermitianMatrix { entries }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("matrix serializes")
    }

    pub fn from_json(s: &str) -> Result<Self> {
        serde_json::from_str(s).map_err(|e| Error::Format(e.to_string()))
    }
}

#[derive(Serialize, Deserialize)]
struct MatrixFile {
    n: usize,
    entries: Vec<Vec<[String; 2]>>,
}

impl Serialize for HermitianMatrix {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        MatrixFile {
            n: self.n(),
            entries: self
                .entries
                .iter()
                .map(|row| {
                    row.iter()
                        .map(|z| [format_rational(&z.re), format_rational(&z.im)])
                        .collect()
                })
                .collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for HermitianMatrix {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let raw = MatrixFile::deserialize(d)?;
        if raw.entries.len() != raw.n {
            return Err(D::Error::custom(format!(
                "\"n\" is {} but \"entries\" has {} rows",
                raw.n,
                raw.entries.len()
            )));
        }
        let mut entries = Vec::with_capacity(raw.n);
        for (i, row) in raw.entries.iter().enumerate() {
            if row.len() != raw.n {
                return Err(D::Error::custom(format!(
                    "row {i} has {} entries, expected {}",
                    row.len(),
                    raw.n
                )));
            }
            let mut parsed = Vec::with_capacity(raw.n);
            for (j, [re, im]) in row.iter().enumerate() {
                let part = |s: &str| {
                    parse_rational(s).map_err(|e| D::Error::custom(format!("entry ({i}, {j}): {e}")))
                };
                parsed.push(GaussianRational::new(part(re)?, part(im)?));
            }
            entries.push(parsed);
        }
        HermitianMatrix::new(entries).map_err(|e| D::Error::custom(e.to_string()))
    }
}

/// Determinant by fraction-free (Bareiss) elimination.
///
/// Each row is first scaled by the lcm of its denominators so that all
/// entries are Gaussian integers; every Bareiss division is then exact in
/// `Z[i]`, and the scale factors are divided out at the end.
pub fn det_exact(m: &[Vec<GaussianRational>]) -> Result<GaussianRational> {
    let n = check_square(m)?;
    if n == 0 {
        return Ok(GaussianRational::one());
    }
    let mut scale = Rational::one();
    let mut a: Matrix = m
        .iter()
        .map(|row| {
            let l = row
                .iter()
                .fold(BigInt::one(), |acc, z| num_integer::Integer::lcm(&acc, &z.denom_lcm()));
            let l = Rational::from_integer(l);
            scale *= &l;
            row.iter().map(|z| z.scale(&l)).collect()
        })
        .collect();

    let mut negate = false;
    let mut prev = GaussianRational::one();
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&r| !a[r][k].is_zero()) {
                Some(r) => {
                    a.swap(k, r);
                    negate = !negate;
                }
                None => return Ok(GaussianRational::zero()),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let t = &(&a[k][k] * &a[i][j]) - &(&a[i][k] * &a[k][j]);
                a[i][j] = &t / &prev;
                debug_assert!(a[i][j].is_gaussian_integer());
            }
            a[i][k] = GaussianRational::zero();
        }
        prev = a[k][k].clone();
    }
    let mut det = a[n - 1][n - 1].scale(&scale.recip());
    if negate {
        det = -&det;
    }
    Ok(det)
}

/// Gaussian integer `(re, im)`; the working type for [`char_poly`].
type GInt = (BigInt, BigInt);

fn gmul(a: &GInt, b: &GInt) -> GInt {
    (&a.0 * &b.0 - &a.1 * &b.1, &a.0 * &b.1 + &a.1 * &b.0)
}

fn mat_mul(a: &[Vec<GInt>], b: &[Vec<GInt>]) -> Vec<Vec<GInt>> {
    let n = a.len();
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    let mut s = (BigInt::zero(), BigInt::zero());
                    for k in 0..n {
                        let t = gmul(&a[i][k], &b[k][j]);
                        s.0 += t.0;
                        s.1 += t.1;
                    }
                    s
                })
                .collect()
        })
        .collect()
}

/// `det(xI - A)` by Faddeev–LeVerrier.
///
/// `A` is scaled by the lcm `D` of its denominators to a Gaussian integer
/// matrix `B`. With `M_0 = 0`, `c_n = 1`: `M_k = B M_{k-1} + c_{n-k+1} I`
/// and `c_{n-k} = -tr(B M_k) / k`, every division exact. Then
/// `det(xI - A) = D^-n det(DxI - B)`. Each coefficient must come out real.
pub fn char_poly(a: &HermitianMatrix) -> Result<Polynomial> {
    let n = a.n();
    let d = a
        .entries()
        .iter()
        .flatten()
        .fold(BigInt::one(), |acc, z| num_integer::Integer::lcm(&acc, &z.denom_lcm()));
    let dr = Rational::from_integer(d.clone());
    let b: Vec<Vec<GInt>> = a
        .entries()
        .iter()
        .map(|row| {
            row.iter()
                .map(|z| {
                    let s = z.scale(&dr);
                    (s.re.to_integer(), s.im.to_integer())
                })
                .collect()
        })
        .collect();

    let mut coeffs = vec![BigInt::zero(); n + 1];
    coeffs[n] = BigInt::one();
    let mut m: Vec<Vec<GInt>> = vec![vec![(BigInt::zero(), BigInt::zero()); n]; n];
    for k in 1..=n {
        let mut next = mat_mul(&b, &m);
        for (i, row) in next.iter_mut().enumerate() {
            row[i].0 += &coeffs[n - k + 1];
        }
        m = next;
        let (mut re, mut im) = (BigInt::zero(), BigInt::zero());
        for (i, row) in b.iter().enumerate() {
            for (j, z) in row.iter().enumerate() {
                let t = gmul(z, &m[j][i]);
                re += t.0;
                im += t.1;
            }
        }
        if !im.is_zero() {
            let scale = Rational::from_integer(BigInt::from(k) * d.pow(k as u32));
            return Err(Error::ComplexCoefficient {
                power: n - k,
                imag: format_rational(&-(Rational::from_integer(im) / scale)),
            });
        }
        let kk = BigInt::from(k);
        debug_assert!((&re % &kk).is_zero());
        coeffs[n - k] = -(re / kk);
    }
    let mut dpow = Rational::one();
    let mut real = vec![Rational::zero(); n + 1];
    for i in (0..=n).rev() {
        real[i] = Rational::from_integer(coeffs[i].clone()) / &dpow;
        dpow *= &dr;
    }
    Ok(Polynomial::new(real))
}

/// Deletes row and column `k`.
pub fn principal_submatrix(a: &HermitianMatrix, k: usize) -> Result<HermitianMatrix> {
    let n = a.n();
    if n < 2 {
        return Err(Error::DimensionTooSmall { n, min: 2 });
    }
    if k >= n {
        return Err(Error::IndexOutOfRange { index: k, n });
    }
    let entries = a
        .entries()
        .iter()
        .enumerate()
        .filter(|(i, _)| *i != k)
        .map(|(_, row)| {
            row.iter()
                .enumerate()
                .filter(|(j, _)| *j != k)
                .map(|(_, z)| z.clone())
                .collect()
        })
        .collect();
    Ok(HermitianMatrix { entries })
}

/// Both sides of the bordered determinant identity.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IdentityReport {
    #[serde(with = "rational::serde_str")]
    pub alpha: Rational,
    /// `det(xI - A_α)`, where `A_α` is `A` with `d` replaced by `d + α`.
    pub lhs_coeffs: Polynomial,
    /// `det(xI - A) - α·det(xI - B)`.
    pub rhs_sum_coeffs: Polynomial,
    pub exact_match: bool,
}

/// Checks `det(xI - A_α) = det(xI - A) - α·det(xI - B)` coefficientwise,
/// with `B` the leading `(n-1)×(n-1)` block and `A_α` equal to `A` except
/// the last diagonal entry is `d + α`.
///
/// This is linearity of the determinant in the last row,
/// `|A_α - xI| = |A - xI| + α|B - xI|`, multiplied through by `(-1)^n`;
/// the sign of the `α` term flips because `B` has one row fewer.
pub fn bordered_identity(a: &HermitianMatrix, alpha: &Rational) -> Result<IdentityReport> {
    let n = a.n();
    if n < 2 {
        return Err(Error::DimensionTooSmall { n, min: 2 });
    }
    let b = principal_submatrix(a, n - 1)?;
    let lhs = char_poly(&a.shift_diagonal(n - 1, alpha))?;
    let rhs = lin_comb(&char_poly(a)?, &char_poly(&b)?, &-alpha);
    Ok(IdentityReport {
        alpha: alpha.clone(),
        exact_match: lhs == rhs,
        lhs_coeffs: lhs,
        rhs_sum_coeffs: rhs,
    })
}

/// Isolating intervals for the eigenvalues of `a`, refined to `width`.
///
/// Fails if the eigenvalues counted with multiplicity fall short of `n`,
/// which cannot happen for a Hermitian matrix.
pub fn eigen_intervals(a: &HermitianMatrix, width: &Rational) -> Result<RootIntervals> {
    let p = char_poly(a)?;
    let iso = isolate_roots(&p)?;
    let found = iso.total_multiplicity();
    if found != a.n() {
        return Err(Error::SpectrumNotReal {
            expected: a.n(),
            found,
        });
    }
    Ok(refine_to(&iso, width))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CauchyReport {
    /// Deleted row/column.
    pub k: usize,
    pub eigen_intervals_a: RootIntervals,
    pub eigen_intervals_b: RootIntervals,
    pub interlace: InterlaceReport,
}

impl CauchyReport {
    pub fn holds(&self) -> bool {
        self.interlace.interlaces()
    }
}

/// Checks that the eigenvalues of `A` with row/column `k` deleted
/// interlace those of `A`.
///
/// A verdict other than `Interlaces` means a bug somewhere in this crate;
/// callers should treat it as a hard failure.
pub fn cauchy_check(a: &HermitianMatrix, k: usize) -> Result<CauchyReport> {
    cauchy_check_with_width(a, k, &default_width())
}

pub fn cauchy_check_with_width(a: &HermitianMatrix, k: usize, width: &Rational) -> Result<CauchyReport> {
    let b = principal_submatrix(a, k)?;
    let ea = eigen_intervals(a, width)?;
    let eb = eigen_intervals(&b, width)?;
    let interlace = interlaces_by_roots(&ea, &eb)?;
    Ok(CauchyReport {
        k,
        eigen_intervals_a: ea,
        eigen_intervals_b: eb,
        interlace,
    })
}

/// `det(xI - A) - α·det(xI - B)` for the leading block `B`: the pencil
/// member whose real-rootedness drives the interlacing argument.
pub fn bordered_pencil(a: &HermitianMatrix, alpha: &Rational) -> Result<Polynomial> {
    let b = principal_submatrix(a, a.n() - 1)?;
    Ok(lin_comb(&char_poly(a)?, &char_poly(&b)?, &-alpha))
}
