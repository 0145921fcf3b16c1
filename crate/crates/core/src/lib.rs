//! Exact verification of eigenvalue interlacing.
//!
//! This crate checks three related facts with exact rational arithmetic:
//!
//! * whether the roots of `f` (degree `n`) and `g` (degree `n - 1`)
//!   *interlace*, `r_1 <= s_1 <= r_2 <= ... <= s_{n-1} <= r_n`
//!   ([`interlaces_exact`]);
//! * that interlacing is equivalent to every member of the pencil `f + αg`
//!   being real-rooted, probed by sampling α ([`pencil_scan`],
//!   [`hko_crosscheck`]);
//! * Cauchy's interlace theorem: the eigenvalues of a principal submatrix
//!   of a Hermitian matrix interlace those of the matrix ([`cauchy_check`]),
//!   together with the determinant identity behind it
//!   ([`bordered_identity`]).
//!
//! Nothing uses floating point. Real roots are counted with Sturm chains and
//! held as isolating intervals with rational endpoints; equal roots are
//! certified through polynomial gcds rather than tolerances.
//!
//! ```
//! use interlace::{cauchy_check, HermitianMatrix};
//!
//! let a = HermitianMatrix::from_real_rows(&[&[2, 1, 0], &[1, 2, 1], &[0, 1, 2]]).unwrap();
//! let report = cauchy_check(&a, 2).unwrap();
//! assert!(report.holds());
//! ```
//!
//! A longer guide lives in the `book/` directory of the repository; its
//! code samples are compiled and run as doctests of this crate.

pub mod error;
pub mod gaussian;
pub mod hermitian;
pub mod interlace;
pub mod poly;
pub mod random;
pub mod rational;
pub mod roots;

pub use error::{Error, Result};
pub use gaussian::GaussianRational;
pub use hermitian::{
    bordered_identity, bordered_pencil, cauchy_check, cauchy_check_with_width, char_poly, det_exact,
    eigen_intervals, is_hermitian, principal_submatrix, CauchyReport, HermitianMatrix, IdentityReport,
};
pub use interlace::{
    default_alphas, hko_crosscheck, interlaces_by_roots, interlaces_by_roots_with, interlaces_exact,
    interlaces_exact_with, pencil_scan, Consistency, HkoReport, InterlaceReport, PencilReport, Verdict,
};
pub use poly::{lin_comb, poly_gcd, squarefree_part, Polynomial};
pub use rational::{int, parse_rational, rat, Rational};
pub use roots::{
    build_sturm, cauchy_bound, count_roots_in, is_real_rooted, isolate_roots, refine_to, RootIntervals,
    SturmChain,
};

// The guide's chapters, compiled as doctests so the book cannot drift.
#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/polynomials.md")]
    mod polynomials {}
    #[doc = include_str!("../../../book/src/sturm.md")]
    mod sturm {}
    #[doc = include_str!("../../../book/src/interlacing.md")]
    mod interlacing {}
    #[doc = include_str!("../../../book/src/pencils.md")]
    mod pencils {}
    #[doc = include_str!("../../../book/src/hermitian.md")]
    mod hermitian {}
    #[doc = include_str!("../../../book/src/cli.md")]
    mod cli {}
}
