//! Interlacing of root lists, and the pencil `f + αg`.
//!
//! Interlacing is decided from the definition: with roots `r_1 <= ... <= r_n`
//! of `f` and `s_1 <= ... <= s_{n-1}` of `g`, check the chain
//! `r_1 <= s_1 <= r_2 <= ... <= s_{n-1} <= r_n`. Each comparison refines the
//! two isolating intervals until they separate. Intervals that never
//! separate hold the same root, and that is certified exactly: the root is
//! then a root of `gcd(f, g)` lying in both intervals.
//!
//! The pencil side can only falsify: [`pencil_scan`] tests finitely many α,
//! so a clean scan is evidence, not proof, of interlacing.

use std::cmp::Ordering;

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::poly::{lin_comb, poly_gcd, Polynomial};
use crate::random::SplitMix64;
use crate::rational::{self, format_rational, Rational};
use crate::roots::{is_real_rooted, isolate_roots, RootIntervals, SturmChain};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    Interlaces,
    DoesNotInterlace,
    DegreeMismatch,
    /// `f` or `g` has non-real roots, so the definition does not apply.
    NotRealRooted,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Side {
    F,
    G,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Relation {
    Less,
    Equal,
}

/// One entry of the merged chain `r_1, s_1, r_2, ...`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ChainEntry {
    pub side: Side,
    /// 1-based position within its own root list.
    pub index: usize,
    pub lo: String,
    pub hi: String,
    /// How this entry relates to the next one; `None` for the last entry.
    pub next: Option<Relation>,
}

/// Which link of the chain broke.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum ChainLink {
    /// `r_k <= s_k`
    #[serde(rename = "r_k<=s_k")]
    FThenG,
    /// `s_k <= r_{k+1}`
    #[serde(rename = "s_k<=r_k+1")]
    GThenNextF,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct FailureWitness {
    /// 1-based index `k` of the broken link.
    pub k: usize,
    pub position: ChainLink,
    /// The two roots were equal (only a failure in strict mode).
    pub equal: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct InterlaceReport {
    pub verdict: Verdict,
    pub strict: bool,
    /// Root counts with multiplicity.
    pub roots_f: usize,
    pub roots_g: usize,
    pub lead_sign_f: i8,
    pub lead_sign_g: i8,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub not_real_rooted: Vec<Side>,
    pub chain_certificate: Option<Vec<ChainEntry>>,
    pub failure_witness: Option<FailureWitness>,
}

impl InterlaceReport {
    pub fn interlaces(&self) -> bool {
        self.verdict == Verdict::Interlaces
    }

    fn undecided(verdict: Verdict, strict: bool, f: &Polynomial, g: &Polynomial, counts: (usize, usize)) -> Self {
        InterlaceReport {
            verdict,
            strict,
            roots_f: counts.0,
            roots_g: counts.1,
            lead_sign_f: f.leading_sign(),
            lead_sign_g: g.leading_sign(),
            not_real_rooted: Vec::new(),
            chain_certificate: None,
            failure_witness: None,
        }
    }
}

/// Orders roots of `f` against roots of `g`, refining intervals as needed.
struct Comparator {
    f: RootIntervals,
    g: RootIntervals,
    shared: Option<SturmChain>,
}

impl Comparator {
    fn new(f: &RootIntervals, g: &RootIntervals) -> Result<Self> {
        let h = poly_gcd(f.squarefree(), g.squarefree())?;
        let shared = if h.is_constant() {
            None
        } else {
            Some(SturmChain::new(&h)?)
        };
        Ok(Comparator {
            f: f.clone(),
            g: g.clone(),
            shared,
        })
    }

    /// Compares root `i` of `f` with root `j` of `g`.
    fn compare(&mut self, i: usize, j: usize) -> Ordering {
        loop {
            let a = &self.f.intervals()[i];
            let b = &self.g.intervals()[j];
            if a.hi <= b.lo {
                return Ordering::Less;
            }
            if b.hi <= a.lo {
                return Ordering::Greater;
            }
            // endpoints of either interval are non-roots of the gcd
            if let Some(h) = &self.shared {
                let lo = (&a.lo).max(&b.lo);
                let hi = (&a.hi).min(&b.hi);
                if h.count_roots_closed(lo, hi) > 0 {
                    return Ordering::Equal;
                }
            }
            if a.width() >= b.width() {
                self.f.bisect(i);
            } else {
                self.g.bisect(j);
            }
        }
    }
}

/// Decides the weak chain `r_1 <= s_1 <= ... <= s_{n-1} <= r_n`.
pub fn interlaces_by_roots(roots_f: &RootIntervals, roots_g: &RootIntervals) -> Result<InterlaceReport> {
    interlaces_by_roots_with(roots_f, roots_g, false)
}

/// As [`interlaces_by_roots`]; with `strict` every inequality must be strict.
pub fn interlaces_by_roots_with(
    roots_f: &RootIntervals,
    roots_g: &RootIntervals,
    strict: bool,
) -> Result<InterlaceReport> {
    let rf = roots_f.expanded();
    let sg = roots_g.expanded();
    let (n, m) = (rf.len(), sg.len());
    let mut report = InterlaceReport::undecided(
        Verdict::DegreeMismatch,
        strict,
        roots_f.source(),
        roots_g.source(),
        (n, m),
    );
    if n == 0 || m + 1 != n {
        return Ok(report);
    }

    let mut cmp = Comparator::new(roots_f, roots_g)?;
    let mut links = Vec::with_capacity(2 * m);
    for k in 0..m {
        let steps = [
            (rf[k], sg[k], false, ChainLink::FThenG),
            (rf[k + 1], sg[k], true, ChainLink::GThenNextF),
        ];
        for (i, j, g_first, position) in steps {
            let mut ord = cmp.compare(i, j);
            if g_first {
                ord = ord.reverse();
            }
            let ok = match ord {
                Ordering::Less => true,
                Ordering::Equal => !strict,
                Ordering::Greater => false,
            };
            if !ok {
                report.verdict = Verdict::DoesNotInterlace;
                report.failure_witness = Some(FailureWitness {
                    k: k + 1,
                    position,
                    equal: ord == Ordering::Equal,
                });
                return Ok(report);
            }
            links.push(if ord == Ordering::Equal {
                Relation::Equal
            } else {
                Relation::Less
            });
        }
    }

    let mut certificate = Vec::with_capacity(n + m);
    for pos in 0..(n + m) {
        let (side, list, idx, iv_index) = if pos % 2 == 0 {
            (Side::F, &cmp.f, pos / 2, rf[pos / 2])
        } else {
            (Side::G, &cmp.g, pos / 2, sg[pos / 2])
        };
        let iv = &list.intervals()[iv_index];
        certificate.push(ChainEntry {
            side,
            index: idx + 1,
            lo: format_rational(&iv.lo),
            hi: format_rational(&iv.hi),
            next: links.get(pos).copied(),
        });
    }
    report.verdict = Verdict::Interlaces;
    report.chain_certificate = Some(certificate);
    Ok(report)
}

/// Decides whether `f` and `g` interlace, straight from their coefficients.
pub fn interlaces_exact(f: &Polynomial, g: &Polynomial) -> Result<InterlaceReport> {
    interlaces_exact_with(f, g, false)
}

pub fn interlaces_exact_with(f: &Polynomial, g: &Polynomial, strict: bool) -> Result<InterlaceReport> {
    if f.is_zero() || g.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let degs = (f.degree() as usize, g.degree() as usize);
    if f.degree() != g.degree() + 1 {
        return Ok(InterlaceReport::undecided(Verdict::DegreeMismatch, strict, f, g, degs));
    }
    let mut bad = Vec::new();
    if !is_real_rooted(f)? {
        bad.push(Side::F);
    }
    if !is_real_rooted(g)? {
        bad.push(Side::G);
    }
    if !bad.is_empty() {
        let mut report = InterlaceReport::undecided(Verdict::NotRealRooted, strict, f, g, degs);
        report.not_real_rooted = bad;
        return Ok(report);
    }
    interlaces_by_roots_with(&isolate_roots(f)?, &isolate_roots(g)?, strict)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PencilReport {
    #[serde(with = "rational::serde_vec")]
    pub alphas_tested: Vec<Rational>,
    /// First α, in input order, with `f + αg` not real-rooted.
    #[serde(with = "rational::serde_opt")]
    pub witness: Option<Rational>,
    pub witness_index: Option<usize>,
    /// Number of α with a non-real-rooted pencil member.
    pub failures: usize,
    pub all_real: bool,
}

/// Seed of the random part of [`default_alphas`].
pub const DEFAULT_ALPHA_SEED: u64 = 0xA1FA;
pub const DEFAULT_RANDOM_ALPHAS: usize = 64;

/// `0, ±1/2, ±1, ±2, ±4, ..., ±2^10`, then `random` seeded rationals with
/// numerator in `[-10^4, 10^4]` and denominator in `[1, 10^4]`.
pub fn default_alphas(seed: u64, random: usize) -> Vec<Rational> {
    let mut out = vec![rational::int(0), rational::rat(1, 2), rational::rat(-1, 2)];
    for e in 0..=10 {
        let p = rational::int(1 << e);
        out.push(p.clone());
        out.push(-p);
    }
    let mut rng = SplitMix64::new(seed);
    out.extend((0..random).map(|_| rng.rational(10_000)));
    out
}

/// Tests `f + αg` for real-rootedness over every α given.
pub fn pencil_scan(f: &Polynomial, g: &Polynomial, alphas: &[Rational]) -> Result<PencilReport> {
    if f.degree() != g.degree() + 1 {
        return Err(Error::DegreeMismatch {
            f: f.degree(),
            g: g.degree(),
        });
    }
    let real: Vec<bool> = alphas
        .par_iter()
        .map(|a| is_real_rooted(&lin_comb(f, g, a)))
        .collect::<Result<_>>()?;
    let witness_index = real.iter().position(|ok| !ok);
    Ok(PencilReport {
        alphas_tested: alphas.to_vec(),
        witness: witness_index.map(|i| alphas[i].clone()),
        witness_index,
        failures: real.iter().filter(|ok| !**ok).count(),
        all_real: witness_index.is_none(),
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum Consistency {
    /// `unfalsified`: the pair does not interlace but no sampled α exposed it.
    Consistent { unfalsified: bool },
    Inconsistent { details: String },
}

impl Consistency {
    pub fn is_consistent(&self) -> bool {
        matches!(self, Consistency::Consistent { .. })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HkoReport {
    pub consistency: Consistency,
    pub interlace: InterlaceReport,
    pub pencil: PencilReport,
}

/// Runs the definition check and the pencil scan and checks they agree:
/// interlacing forces every sampled pencil to be real-rooted, and any
/// pencil witness forces non-interlacing.
pub fn hko_crosscheck(f: &Polynomial, g: &Polynomial, alphas: &[Rational]) -> Result<HkoReport> {
    let pencil = pencil_scan(f, g, alphas)?;
    let interlace = interlaces_exact(f, g)?;
    let consistency = match (interlace.interlaces(), &pencil.witness) {
        (true, Some(a)) => Consistency::Inconsistent {
            details: format!(
                "roots interlace but f + ({})g is not real-rooted",
                format_rational(a)
            ),
        },
        (true, None) => Consistency::Consistent { unfalsified: false },
        (false, Some(_)) => Consistency::Consistent { unfalsified: false },
        (false, None) => Consistency::Consistent { unfalsified: true },
    };
    Ok(HkoReport {
        consistency,
        interlace,
        pencil,
    })
}
