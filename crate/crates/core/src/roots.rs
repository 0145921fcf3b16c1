//! Certified real-root counting and isolation with Sturm chains.
//!
//! Every count here is exact. Polynomials are first reduced to their
//! squarefree part, so counts are of *distinct* roots; multiplicities are
//! recovered separately from the gcd tower `p, gcd(p, p'), ...`.
//!
//! Isolating intervals are open: an interval `(lo, hi)` contains exactly one
//! distinct root and neither endpoint is a root. Refinement preserves this.

use num_traits::{One, Signed, Zero};
use serde::ser::SerializeSeq;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::poly::{poly_gcd, squarefree_part, Polynomial, SignPoly};
use crate::rational::{self, format_rational, Rational};

/// Sturm chain `p0, p1 = p0', p(i+1) = -rem(p(i-1), p(i))` of a squarefree `p0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SturmChain {
    chain: Vec<Polynomial>,
    signs: Vec<SignPoly>,
}

impl SturmChain {
    /// Builds the chain for the squarefree part of `p`.
    pub fn new(p: &Polynomial) -> Result<Self> {
        let p0 = squarefree_part(p)?;
        let mut chain = vec![p0];
        let p1 = chain[0].derivative();
        if !p1.is_zero() {
            chain.push(p1);
        }
        while !chain.last().unwrap().is_constant() {
            let n = chain.len();
            let r = -&chain[n - 2].rem(&chain[n - 1])?;
            if r.is_zero() {
                // only possible if p0 were not squarefree
                break;
            }
            chain.push(r);
        }
        let signs = chain.iter().map(SignPoly::new).collect();
        Ok(SturmChain { chain, signs })
    }

    pub fn polys(&self) -> &[Polynomial] {
        &self.chain
    }

    /// The squarefree polynomial whose roots this chain counts.
    pub fn base(&self) -> &Polynomial {
        &self.chain[0]
    }

    /// Sign of the base polynomial at `t`.
    pub(crate) fn base_sign_at(&self, t: &Rational) -> i8 {
        self.signs[0].sign_at(t)
    }

    /// Number of sign changes in the chain evaluated at `t`, zeros skipped.
    pub fn variations_at(&self, t: &Rational) -> usize {
        let mut prev = 0i8;
        let mut changes = 0;
        for p in &self.signs {
            let s = p.sign_at(t);
            if s == 0 {
                continue;
            }
            if prev != 0 && s != prev {
                changes += 1;
            }
            prev = s;
        }
        changes
    }

    /// Distinct roots in `(lo, hi]`, where neither endpoint may be a root.
    pub fn count_roots_in(&self, lo: &Rational, hi: &Rational) -> Result<usize> {
        if lo >= hi {
            return Err(Error::EmptyInterval {
                lo: format_rational(lo),
                hi: format_rational(hi),
            });
        }
        for t in [lo, hi] {
            if self.base_sign_at(t) == 0 {
                return Err(Error::EndpointIsRoot(format_rational(t)));
            }
        }
        Ok(self.variations_at(lo) - self.variations_at(hi))
    }

    /// Distinct roots in the closed interval `[lo, hi]`; endpoints may be roots.
    ///
    /// Relies on the variation count being right-continuous for a chain
    /// seeded with `p0'`, so `V(lo) - V(hi)` counts `(lo, hi]` exactly.
    pub fn count_roots_closed(&self, lo: &Rational, hi: &Rational) -> usize {
        if lo > hi {
            return 0;
        }
        let at_lo = usize::from(self.base_sign_at(lo) == 0);
        if lo == hi {
            return at_lo;
        }
        at_lo + self.variations_at(lo) - self.variations_at(hi)
    }

    /// Counts roots in `(lo, hi)`, moving any endpoint that is a root outward
    /// until it is not. The endpoints actually used are reported back.
    ///
    /// Each move goes halfway toward `±P`, with `P` the first power of two
    /// at or above the Cauchy bound, so no root is ever reached at `±P`.
    pub fn count_roots_nudged(&self, lo: &Rational, hi: &Rational) -> Result<NudgedCount> {
        if lo >= hi {
            return Err(Error::EmptyInterval {
                lo: format_rational(lo),
                hi: format_rational(hi),
            });
        }
        let p0 = self.base();
        let far = rational::pow2_at_least(&cauchy_bound(p0));
        let two = rational::int(2);
        let mut lo = lo.clone();
        let mut hi = hi.clone();
        let mut nudged = false;
        while self.base_sign_at(&lo) == 0 {
            lo = (&lo - &far) / &two;
            nudged = true;
        }
        while self.base_sign_at(&hi) == 0 {
            hi = (&hi + &far) / &two;
            nudged = true;
        }
        let count = self.count_roots_in(&lo, &hi)?;
        Ok(NudgedCount { count, lo, hi, nudged })
    }
}

/// Result of [`SturmChain::count_roots_nudged`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NudgedCount {
    pub count: usize,
    pub lo: Rational,
    pub hi: Rational,
    pub nudged: bool,
}

pub fn build_sturm(p: &Polynomial) -> Result<SturmChain> {
    SturmChain::new(p)
}

pub fn count_roots_in(chain: &SturmChain, lo: &Rational, hi: &Rational) -> Result<usize> {
    chain.count_roots_in(lo, hi)
}

/// Cauchy's bound `1 + max |c_i / c_deg|`; every root lies strictly inside `(-M, M)`.
pub fn cauchy_bound(p: &Polynomial) -> Rational {
    let coeffs = p.coeffs();
    let Some((lc, rest)) = coeffs.split_last() else {
        return Rational::one();
    };
    let max = rest
        .iter()
        .map(|c| (c / lc).abs())
        .max()
        .unwrap_or_else(Rational::zero);
    Rational::one() + max
}

/// True iff every complex root of `p` is real.
pub fn is_real_rooted(p: &Polynomial) -> Result<bool> {
    let chain = SturmChain::new(p)?;
    let m = cauchy_bound(chain.base());
    let distinct = chain.count_roots_in(&-m.clone(), &m)?;
    Ok(distinct as isize == chain.base().degree())
}

/// One isolating interval with the multiplicity of its root.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootInterval {
    pub lo: Rational,
    pub hi: Rational,
    pub mult: usize,
}

impl RootInterval {
    pub fn width(&self) -> Rational {
        &self.hi - &self.lo
    }
}

impl Serialize for RootInterval {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = s.serialize_struct("RootInterval", 3)?;
        st.serialize_field("lo", &format_rational(&self.lo))?;
        st.serialize_field("hi", &format_rational(&self.hi))?;
        st.serialize_field("mult", &self.mult)?;
        st.end()
    }
}

/// Sorted, disjoint isolating intervals for the real roots of a polynomial.
///
/// Serializes as a plain list of `{"lo", "hi", "mult"}` objects.
#[derive(Clone, Debug)]
pub struct RootIntervals {
    source: Polynomial,
    chain: SturmChain,
    intervals: Vec<RootInterval>,
}

impl RootIntervals {
    pub fn source(&self) -> &Polynomial {
        &self.source
    }

    /// The squarefree part of the source; its roots are the isolated ones.
    pub fn squarefree(&self) -> &Polynomial {
        self.chain.base()
    }

    pub fn chain(&self) -> &SturmChain {
        &self.chain
    }

    pub fn intervals(&self) -> &[RootInterval] {
        &self.intervals
    }

    pub fn len(&self) -> usize {
        self.intervals.len()
    }

    pub fn is_empty(&self) -> bool {
        self.intervals.is_empty()
    }

    pub fn total_multiplicity(&self) -> usize {
        self.intervals.iter().map(|iv| iv.mult).sum()
    }

    /// Interval indices with each repeated according to multiplicity,
    /// i.e. the sorted root list `r_1 <= r_2 <= ...` by position.
    pub fn expanded(&self) -> Vec<usize> {
        self.intervals
            .iter()
            .enumerate()
            .flat_map(|(k, iv)| std::iter::repeat(k).take(iv.mult))
            .collect()
    }

    /// Halves interval `k`, keeping the root strictly inside.
    pub(crate) fn bisect(&mut self, k: usize) {
        let chain = &self.chain;
        let iv = &mut self.intervals[k];
        let two = rational::int(2);
        let mid = (&iv.lo + &iv.hi) / &two;
        let at_mid = chain.base_sign_at(&mid);
        if at_mid == 0 {
            // the isolated root is exactly mid; every other point is a non-root
            let lo = (&iv.lo + &mid) / &two;
            let hi = (&mid + &iv.hi) / &two;
            iv.lo = lo;
            iv.hi = hi;
        } else if chain.base_sign_at(&iv.lo) != at_mid {
            iv.hi = mid;
        } else {
            iv.lo = mid;
        }
    }

    /// Bisects interval `k` until its width is at most `width`.
    pub fn refine_interval(&mut self, k: usize, width: &Rational) {
        assert!(width.is_positive(), "refinement width must be positive");
        while self.intervals[k].width() > *width {
            self.bisect(k);
        }
    }
}

impl Eq for RootIntervals {}

impl PartialEq for RootIntervals {
    fn eq(&self, other: &Self) -> bool {
        self.source == other.source && self.intervals == other.intervals
    }
}

impl Serialize for RootIntervals {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut seq = s.serialize_seq(Some(self.intervals.len()))?;
        for iv in &self.intervals {
            seq.serialize_element(iv)?;
        }
        seq.end()
    }
}

/// Isolates every real root of `p` by bisection of the Cauchy interval.
pub fn isolate_roots(p: &Polynomial) -> Result<RootIntervals> {
    let chain = SturmChain::new(p)?;
    let p0 = chain.base().clone();
    let m = cauchy_bound(&p0);
    let two = rational::int(2);

    let mut found: Vec<(Rational, Rational)> = Vec::new();
    let lo = -m.clone();
    let total = chain.count_roots_in(&lo, &m)?;
    // depth-first, left half first, so output is sorted
    let mut stack = vec![(lo, m, total)];
    while let Some((lo, hi, count)) = stack.pop() {
        match count {
            0 => {}
            1 => found.push((lo, hi)),
            _ => {
                let mut mid = (&lo + &hi) / &two;
                let mut step = (&hi - &lo) / rational::int(4);
                while chain.base_sign_at(&mid) == 0 {
                    mid = (&lo + &hi) / &two + &step;
                    step /= &two;
                }
                let left = chain.variations_at(&lo) - chain.variations_at(&mid);
                let right = count - left;
                stack.push((mid.clone(), hi, right));
                stack.push((lo, mid, left));
            }
        }
    }

    let tower = gcd_tower(p)?;
    let intervals = found
        .into_iter()
        .map(|(lo, hi)| {
            let mult = 1 + tower
                .iter()
                .take_while(|c| c.count_roots_in(&lo, &hi).unwrap_or(0) > 0)
                .count();
            RootInterval { lo, hi, mult }
        })
        .collect();

    Ok(RootIntervals {
        source: p.clone(),
        chain,
        intervals,
    })
}

/// Sturm chains of `gcd(p, p')`, `gcd(g1, g1')`, ... down to (excluding) constants.
/// A root of multiplicity `m` is a root of exactly the first `m - 1` of them.
fn gcd_tower(p: &Polynomial) -> Result<Vec<SturmChain>> {
    let mut tower = Vec::new();
    let mut g = poly_gcd(p, &p.derivative())?;
    while !g.is_constant() {
        tower.push(SturmChain::new(&g)?);
        g = poly_gcd(&g, &g.derivative())?;
    }
    Ok(tower)
}

/// Refines every interval to width at most `width`; roots, order and
/// disjointness are unchanged.
///
/// # Panics
///
/// Panics if `width` is not positive.
pub fn refine_to(intervals: &RootIntervals, width: &Rational) -> RootIntervals {
    let mut out = intervals.clone();
    for k in 0..out.len() {
        out.refine_interval(k, width);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{int, rat};

    fn p(c: &[i64]) -> Polynomial {
        Polynomial::from_ints(c)
    }

    #[test]
    fn sturm_chain_examples() {
        let c = build_sturm(&p(&[-1, 0, 1])).unwrap();
        assert_eq!(c.polys(), &[p(&[-1, 0, 1]), p(&[0, 2]), p(&[1])]);
        let c = build_sturm(&p(&[0, 1])).unwrap();
        assert_eq!(c.polys(), &[p(&[0, 1]), p(&[1])]);
        let c = build_sturm(&p(&[1, 0, 1])).unwrap();
        assert_eq!(c.polys(), &[p(&[1, 0, 1]), p(&[0, 2]), p(&[-1])]);
        assert_eq!(build_sturm(&Polynomial::zero()), Err(Error::ZeroPolynomial));
    }

    #[test]
    fn chain_degrees_strictly_decrease() {
        let c = build_sturm(&p(&[3, -7, 0, 2, 5, -1])).unwrap();
        let degs: Vec<_> = c.polys().iter().map(Polynomial::degree).collect();
        assert!(degs.windows(2).all(|w| w[0] > w[1]));
        assert_eq!(*degs.last().unwrap(), 0);
    }

    #[test]
    fn count_examples() {
        let c = build_sturm(&p(&[-1, 0, 1])).unwrap();
        assert_eq!(c.variations_at(&int(-2)), 2);
        assert_eq!(c.variations_at(&int(2)), 0);
        assert_eq!(count_roots_in(&c, &int(-2), &int(2)).unwrap(), 2);
        let c = build_sturm(&p(&[1, 0, 1])).unwrap();
        assert_eq!(count_roots_in(&c, &int(-10), &int(10)).unwrap(), 0);
        let c = build_sturm(&p(&[0, 1])).unwrap();
        assert_eq!(count_roots_in(&c, &int(-1), &int(1)).unwrap(), 1);
    }

    #[test]
    fn count_rejects_root_endpoints_and_empty_ranges() {
        let c = build_sturm(&p(&[-1, 0, 1])).unwrap();
        assert!(matches!(c.count_roots_in(&int(1), &int(3)), Err(Error::EndpointIsRoot(_))));
        assert!(matches!(c.count_roots_in(&int(2), &int(2)), Err(Error::EmptyInterval { .. })));
    }

    #[test]
    fn nudged_count_reports_moved_endpoints() {
        let c = build_sturm(&p(&[-1, 0, 1])).unwrap();
        // bound is 2, next power of two 2: lo = -1 moves to (-1 - 2)/2 = -3/2
        let n = c.count_roots_nudged(&int(-1), &int(0)).unwrap();
        assert!(n.nudged);
        assert_eq!(n.lo, rat(-3, 2));
        assert_eq!(n.count, 1);
        let n = c.count_roots_nudged(&int(-3), &int(3)).unwrap();
        assert!(!n.nudged);
        assert_eq!(n.count, 2);
    }

    #[test]
    fn closed_counts_include_endpoints() {
        let c = build_sturm(&Polynomial::from_roots(&[int(-1), int(0), int(2)])).unwrap();
        assert_eq!(c.count_roots_closed(&int(-1), &int(2)), 3);
        assert_eq!(c.count_roots_closed(&int(-1), &int(0)), 2);
        assert_eq!(c.count_roots_closed(&int(0), &int(0)), 1);
        assert_eq!(c.count_roots_closed(&rat(1, 2), &rat(3, 2)), 0);
    }

    #[test]
    fn real_rootedness_examples() {
        assert!(is_real_rooted(&p(&[-1, 0, 1])).unwrap());
        assert!(!is_real_rooted(&p(&[1, 0, 1])).unwrap());
        assert!(!is_real_rooted(&p(&[3, -3, 1])).unwrap());
        assert!(is_real_rooted(&p(&[4])).unwrap());
        assert!(is_real_rooted(&Polynomial::from_roots(&[int(2), int(2), int(2)])).unwrap());
        assert_eq!(is_real_rooted(&Polynomial::zero()), Err(Error::ZeroPolynomial));
    }

    #[test]
    fn isolate_examples() {
        let r = isolate_roots(&p(&[-1, 0, 1])).unwrap();
        assert_eq!(r.len(), 2);
        assert!(r.intervals()[0].lo < int(-1) && int(-1) < r.intervals()[0].hi);
        assert!(r.intervals()[1].lo < int(1) && int(1) < r.intervals()[1].hi);
        assert_eq!(r.expanded(), vec![0, 1]);

        let r = isolate_roots(&p(&[1, -2, 1])).unwrap();
        assert_eq!(r.len(), 1);
        assert_eq!(r.intervals()[0].mult, 2);
        assert!(r.intervals()[0].lo < int(1) && int(1) < r.intervals()[0].hi);

        let r = isolate_roots(&p(&[-6, 11, -6, 1])).unwrap();
        assert_eq!(r.len(), 3);
        for (iv, root) in r.intervals().iter().zip([1, 2, 3]) {
            assert!(iv.lo < int(root) && int(root) < iv.hi);
            assert_eq!(iv.mult, 1);
        }

        assert!(isolate_roots(&p(&[1, 0, 1])).unwrap().is_empty());
    }

    #[test]
    fn isolate_midpoint_on_root() {
        // bound is 2 so the first midpoint is 0, a root
        let f = Polynomial::from_roots(&[int(-1), int(0), int(1)]);
        let r = isolate_roots(&f).unwrap();
        assert_eq!(r.len(), 3);
        for (iv, root) in r.intervals().iter().zip([-1, 0, 1]) {
            assert!(iv.lo < int(root) && int(root) < iv.hi);
        }
    }

    #[test]
    fn multiplicities_from_tower() {
        let f = Polynomial::from_roots(&[int(1), int(1), int(-2), int(-2), int(-2), rat(1, 3)]);
        let r = isolate_roots(&f).unwrap();
        let mults: Vec<_> = r.intervals().iter().map(|iv| iv.mult).collect();
        assert_eq!(mults, vec![3, 1, 2]);
        assert_eq!(r.total_multiplicity(), 6);
    }

    #[test]
    fn refine_examples() {
        let r = isolate_roots(&p(&[-1, 0, 1])).unwrap();
        let w = rat(1, 1024);
        let rr = refine_to(&r, &w);
        assert_eq!(rr.len(), 2);
        for (iv, root) in rr.intervals().iter().zip([-1, 1]) {
            assert!(iv.width() <= w);
            assert!(iv.lo < int(root) && int(root) < iv.hi);
        }

        let empty = isolate_roots(&p(&[1, 0, 1])).unwrap();
        assert!(refine_to(&empty, &w).is_empty());

        // sqrt 2 is in (1414213/1000000, 1414214/1000000)
        let r = refine_to(&isolate_roots(&p(&[-2, 0, 1])).unwrap(), &rat(1, 1_000_000));
        let iv = &r.intervals()[1];
        assert!(iv.width() <= rat(1, 1_000_000));
        assert!(iv.lo < rat(1_414_214, 1_000_000));
        assert!(iv.hi > rat(1_414_213, 1_000_000));
    }

    #[test]
    fn serializes_interval_list() {
        let r = isolate_roots(&p(&[0, 1])).unwrap();
        assert_eq!(
            serde_json::to_string(&r).unwrap(),
            r#"[{"lo":"-1","hi":"1","mult":1}]"#
        );
    }
}
