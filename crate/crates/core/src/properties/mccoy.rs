use std::collections::BTreeMap;
use std::time::Instant;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::properties::elementwise;
use crate::properties::pairs::{carrier_count, partner_cost, partners, Partners};
use crate::properties::poly::{poly_mul, Polynomial};
use crate::properties::verdict::{
    Bounds, Certificate, ElementRecord, Polarity, PolyRecord, SearchStats, Transcript, Verdict, WitnessCount,
    WitnessFailure,
};
use crate::properties::{Property, SearchLimits, Side};
use crate::ring::{center_mask, RingView};

struct Ctx<'a, R: ?Sized> {
    r: &'a R,
    n: u32,
    d: usize,
    center: Vec<bool>,
}

impl<'a, R: RingView + ?Sized> Ctx<'a, R> {
    fn new(r: &'a R, d: usize) -> Self {
        Self {
            r,
            n: r.size(),
            d,
            center: center_mask(r),
        }
    }

    fn poly(&self, idx: u64) -> Polynomial {
        Polynomial::from_index(idx as u128, self.n, self.d)
    }

    fn product(&self, side: Side, c: u32, w: u32) -> u32 {
        match side {
            Side::Right => self.r.mul_idx(c, w),
            Side::Left => self.r.mul_idx(w, c),
        }
    }

    fn accepts(&self, central: bool, prod: u32) -> bool {
        if central {
            self.center[prod as usize]
        } else {
            prod == 0
        }
    }

    /// Least nonzero `w` with every coefficient product accepted.
    fn witness(&self, side: Side, central: bool, carrier: &Polynomial) -> Option<u32> {
        (1..self.n).find(|&w| {
            carrier
                .coeffs()
                .iter()
                .all(|&c| self.accepts(central, self.product(side, c, w)))
        })
    }

    fn least_noncommuting(&self, a: u32) -> u32 {
        (0..self.n)
            .find(|&t| self.r.mul_idx(a, t) != self.r.mul_idx(t, a))
            .expect("non-central element has a non-commuting partner")
    }

    fn transcript(&self, side: Side, central: bool, carrier: &Polynomial) -> Vec<WitnessFailure> {
        (1..self.n)
            .map(|w| {
                let (i, prod) = carrier
                    .coeffs()
                    .iter()
                    .enumerate()
                    .map(|(i, &c)| (i, self.product(side, c, w)))
                    .find(|&(_, prod)| !self.accepts(central, prod))
                    .expect("transcript is only built for witnessless carriers");
                WitnessFailure {
                    r: ElementRecord::of(self.r, w),
                    coefficient: i,
                    product: ElementRecord::of(self.r, prod),
                    t: central.then(|| ElementRecord::of(self.r, self.least_noncommuting(prod))),
                }
            })
            .collect()
    }

    fn ordered(&self, side: Side, carrier: Polynomial, partner: Polynomial) -> (Polynomial, Polynomial) {
        match side {
            Side::Right => (carrier, partner),
            Side::Left => (partner, carrier),
        }
    }
}

#[derive(Default)]
struct Summary {
    /// Least (carrier, partner) refuting the property.
    refute: Option<(u64, u64)>,
    zd_carriers: u64,
    pairs: u128,
    witnessless: u64,
    histogram: BTreeMap<u32, u64>,
}

impl Summary {
    fn merge(mut self, other: Summary) -> Summary {
        self.refute = match (self.refute, other.refute) {
            (Some(a), Some(b)) => Some(a.min(b)),
            (a, b) => a.or(b),
        };
        self.zd_carriers += other.zd_carriers;
        self.pairs += other.pairs;
        self.witnessless += other.witnessless;
        for (w, c) in other.histogram {
            *self.histogram.entry(w).or_default() += c;
        }
        self
    }
}

fn require_degree(d: usize) -> Result<()> {
    if d == 0 {
        return Err(Error::usage("McCoy-type checks need max degree >= 1"));
    }
    Ok(())
}

fn histogram<R: RingView + ?Sized>(r: &R, h: BTreeMap<u32, u64>) -> Vec<WitnessCount> {
    h.into_iter()
        .map(|(w, carriers)| WitnessCount {
            witness: ElementRecord::of(r, w),
            carriers,
        })
        .collect()
}

fn check_witness_property<R: RingView + ?Sized>(
    r: &R,
    property: Property,
    d: usize,
    limits: &SearchLimits,
) -> Result<Verdict> {
    require_degree(d)?;
    let start = Instant::now();
    let (side, central) = property.witness_shape().expect("McCoy-type property");
    let carriers = carrier_count(r, d, partner_cost(r, d) + r.size() as u128, limits)?;
    let ctx = Ctx::new(r, d);
    let summary = (1..carriers)
        .into_par_iter()
        .fold(Summary::default, |mut acc, ci| {
            let carrier = ctx.poly(ci);
            let found = partners(r, d, side, &carrier);
            let count = found.count();
            if count == 0 {
                return acc;
            }
            acc.zd_carriers += 1;
            acc.pairs += count;
            match ctx.witness(side, central, &carrier) {
                Some(w) => *acc.histogram.entry(w).or_default() += 1,
                None => {
                    acc.witnessless += 1;
                    let pi = found.least().expect("nonempty");
                    if acc.refute.is_none_or(|cur| (ci, pi) < cur) {
                        acc.refute = Some((ci, pi));
                    }
                }
            }
            acc
        })
        .reduce(Summary::default, Summary::merge);

    let uw = if (side, central) == (Side::Right, true) {
        universal_witness(r).map(|w| ElementRecord::of(r, w))
    } else {
        None
    };
    let refuted = summary.refute.is_some();
    let polarity = if refuted { Polarity::Refuted } else { Polarity::NotRefuted };
    let certificate = summary.refute.map(|(ci, pi)| {
        let carrier = ctx.poly(ci);
        let failures = ctx.transcript(side, central, &carrier);
        let (f, g) = ctx.ordered(side, carrier, ctx.poly(pi));
        Certificate::Pair {
            f: PolyRecord::of(r, &f),
            g: PolyRecord::of(r, &g),
            transcript: Transcript::Exhaustive { failures },
        }
    });
    Ok(Verdict {
        property,
        ring: r.label(),
        polarity,
        bounds: Bounds::degree(d, polarity),
        certificate,
        universal_witness: uw,
        stats: SearchStats {
            candidates: carriers - 1,
            zero_divisor_carriers: summary.zd_carriers,
            pairs: summary.pairs,
            witnessless_carriers: summary.witnessless,
            witness_histogram: if refuted { Vec::new() } else { histogram(r, summary.histogram) },
        },
        elapsed: start.elapsed(),
    })
}

pub fn check_right_mccoy<R: RingView + ?Sized>(r: &R, d: usize, limits: &SearchLimits) -> Result<Verdict> {
    check_witness_property(r, Property::RightMccoy, d, limits)
}

pub fn check_left_mccoy<R: RingView + ?Sized>(r: &R, d: usize, limits: &SearchLimits) -> Result<Verdict> {
    check_witness_property(r, Property::LeftMccoy, d, limits)
}

pub fn check_right_central_mccoy<R: RingView + ?Sized>(r: &R, d: usize, limits: &SearchLimits) -> Result<Verdict> {
    check_witness_property(r, Property::RightCentralMccoy, d, limits)
}

pub fn check_left_central_mccoy<R: RingView + ?Sized>(r: &R, d: usize, limits: &SearchLimits) -> Result<Verdict> {
    check_witness_property(r, Property::LeftCentralMccoy, d, limits)
}

/// Least `c != 0` with `a·c` central for every `a`; such a `c` is a witness
/// for every pair, at every degree.
pub fn universal_witness<R: RingView + ?Sized>(r: &R) -> Option<u32> {
    let center = center_mask(r);
    let probes: Vec<u32> = match r.basis() {
        Some(b) => {
            let mut v: Vec<u32> = (0..b.dim()).map(|k| b.unit(k)).collect();
            v.extend(r.one_idx());
            v
        }
        None => (1..r.size()).collect(),
    };
    (1..r.size()).find(|&c| probes.iter().all(|&a| center[r.mul_idx(a, c) as usize]))
}

/// First failing coefficient product `(i, j, a_i b_j)` of a zero-divisor pair.
fn failing_product<R: RingView + ?Sized>(
    r: &R,
    center: &[bool],
    central: bool,
    f: &Polynomial,
    g: &Polynomial,
) -> Option<(usize, usize, u32)> {
    for (i, &a) in f.coeffs().iter().enumerate() {
        for (j, &b) in g.coeffs().iter().enumerate() {
            let prod = r.mul_idx(a, b);
            let bad = if central { !center[prod as usize] } else { prod != 0 };
            if bad {
                return Some((i, j, prod));
            }
        }
    }
    None
}

fn check_product_property<R: RingView + ?Sized>(
    r: &R,
    property: Property,
    d: usize,
    limits: &SearchLimits,
) -> Result<Verdict> {
    let start = Instant::now();
    let central = property == Property::CentralArmendariz;
    let carriers = carrier_count(r, d, partner_cost(r, d), limits)?;
    let ctx = Ctx::new(r, d);
    let summary = (1..carriers)
        .into_par_iter()
        .fold(Summary::default, |mut acc, fi| {
            let f = ctx.poly(fi);
            let found = partners(r, d, Side::Right, &f);
            let count = found.count();
            if count == 0 {
                return acc;
            }
            acc.zd_carriers += 1;
            acc.pairs += count;
            // the condition is linear in g when partners form a subspace
            let bad = |gi: &u64| failing_product(r, &ctx.center, central, &f, &ctx.poly(*gi)).is_some();
            let fails = match &found {
                Partners::Linear { .. } => found.generators().iter().any(bad),
                Partners::Listed(_) => true,
            };
            if fails {
                if let Some(gi) = found.iter().find(bad) {
                    acc.witnessless += 1;
                    if acc.refute.is_none_or(|cur| (fi, gi) < cur) {
                        acc.refute = Some((fi, gi));
                    }
                }
            }
            acc
        })
        .reduce(Summary::default, Summary::merge);

    let polarity = if summary.refute.is_some() {
        Polarity::Refuted
    } else {
        Polarity::NotRefuted
    };
    let certificate = summary.refute.map(|(fi, gi)| {
        let (f, g) = (ctx.poly(fi), ctx.poly(gi));
        let (i, j, prod) = failing_product(r, &ctx.center, central, &f, &g).expect("refuting pair");
        Certificate::Pair {
            f: PolyRecord::of(r, &f),
            g: PolyRecord::of(r, &g),
            transcript: Transcript::Product {
                i,
                j,
                product: ElementRecord::of(r, prod),
                t: central.then(|| ElementRecord::of(r, ctx.least_noncommuting(prod))),
            },
        }
    });
    Ok(Verdict {
        property,
        ring: r.label(),
        polarity,
        bounds: Bounds::degree(d, polarity),
        certificate,
        universal_witness: None,
        stats: SearchStats {
            candidates: carriers - 1,
            zero_divisor_carriers: summary.zd_carriers,
            pairs: summary.pairs,
            witnessless_carriers: summary.witnessless,
            witness_histogram: Vec::new(),
        },
        elapsed: start.elapsed(),
    })
}

pub fn check_armendariz<R: RingView + ?Sized>(r: &R, d: usize, limits: &SearchLimits) -> Result<Verdict> {
    check_product_property(r, Property::Armendariz, d, limits)
}

pub fn check_central_armendariz<R: RingView + ?Sized>(r: &R, d: usize, limits: &SearchLimits) -> Result<Verdict> {
    check_product_property(r, Property::CentralArmendariz, d, limits)
}

/// Dispatches on the property; `d` is ignored for element-level properties.
pub fn check<R: RingView + ?Sized>(r: &R, property: Property, d: usize, limits: &SearchLimits) -> Result<Verdict> {
    match property {
        Property::RightMccoy
        | Property::LeftMccoy
        | Property::RightCentralMccoy
        | Property::LeftCentralMccoy => check_witness_property(r, property, d, limits),
        Property::Armendariz | Property::CentralArmendariz => check_product_property(r, property, d, limits),
        Property::Reversible => elementwise::check_reversible(r, limits),
        Property::Semicommutative => elementwise::check_semicommutative(r, limits),
        Property::Abelian => elementwise::check_abelian(r, limits),
        Property::Reduced => elementwise::check_reduced(r, limits),
    }
}

/// Outcome of checking one given pair.
#[derive(Debug, Clone)]
pub struct PairCheck {
    pub product_is_zero: bool,
    /// Least witness; `None` means the pair refutes the property.
    pub witness: Option<u32>,
    /// Failure lines for every nonzero element when no witness exists.
    pub failures: Vec<WitnessFailure>,
}

/// Checks a specific pair `(f, g)` against a McCoy-type property.
pub fn check_pair<R: RingView + ?Sized>(
    r: &R,
    property: Property,
    f: &Polynomial,
    g: &Polynomial,
) -> Result<PairCheck> {
    let (side, central) = property
        .witness_shape()
        .ok_or_else(|| Error::usage(format!("{property} has no witness condition")))?;
    if f.is_zero() || g.is_zero() {
        return Err(Error::usage("pair polynomials must be nonzero"));
    }
    for &c in f.coeffs().iter().chain(g.coeffs()) {
        if c >= r.size() {
            return Err(Error::OutOfRange {
                index: c as u64,
                size: r.size() as u64,
            });
        }
    }
    let d = f.coeffs().len().max(g.coeffs().len()) - 1;
    let ctx = Ctx::new(r, d);
    let carrier = match side {
        Side::Right => f,
        Side::Left => g,
    };
    let witness = ctx.witness(side, central, carrier);
    let failures = if witness.is_none() {
        ctx.transcript(side, central, carrier)
    } else {
        Vec::new()
    };
    Ok(PairCheck {
        product_is_zero: poly_mul(r, f, g).is_zero(),
        witness,
        failures,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{matrix_ring, prime_field, product, zmod, Family, Limits, MatrixShape};
    use crate::properties::verify_certificate;
    use crate::ring::FiniteRing;

    fn mat(family: Family, n: usize) -> FiniteRing {
        matrix_ring(&MatrixShape::new(family, n, prime_field(2).unwrap()), &Limits::default()).unwrap()
    }

    #[test]
    fn m2_is_not_right_central_mccoy() {
        let m2 = mat(Family::Full, 2);
        let v = check_right_central_mccoy(&m2, 1, &SearchLimits::default()).unwrap();
        assert!(v.is_refuted());
        verify_certificate(&m2, &v).unwrap();
        let Some(Certificate::Pair { f, transcript, .. }) = &v.certificate else {
            panic!()
        };
        assert_eq!(f.index, 18);
        let Transcript::Exhaustive { failures } = transcript else { panic!() };
        assert_eq!(failures.len(), 15);
    }

    #[test]
    fn printed_pair_also_refutes() {
        let m2 = mat(Family::Full, 2);
        let pc = check_pair(
            &m2,
            Property::RightCentralMccoy,
            &Polynomial::new(vec![2, 1]),
            &Polynomial::new(vec![2, 8]),
        )
        .unwrap();
        assert!(pc.product_is_zero);
        assert_eq!(pc.witness, None);
        assert_eq!(pc.failures.len(), 15);
    }

    #[test]
    fn commutative_rings_pass() {
        let z4 = zmod(4).unwrap();
        for p in [Property::RightMccoy, Property::LeftMccoy, Property::Armendariz] {
            let v = check(&z4, p, 2, &SearchLimits::default()).unwrap();
            assert!(!v.is_refuted(), "{p}");
        }
        assert_eq!(universal_witness(&z4), Some(1));
    }

    #[test]
    fn t2_refutations() {
        let t2 = mat(Family::UpperTriangular, 2);
        let limits = SearchLimits::default();
        for p in [Property::RightCentralMccoy, Property::Armendariz, Property::LeftCentralMccoy] {
            let v = check(&t2, p, 1, &limits).unwrap();
            assert!(v.is_refuted(), "{p}");
            verify_certificate(&t2, &v).unwrap();
        }
        assert_eq!(universal_witness(&mat(Family::Full, 2)), None);
    }

    #[test]
    fn degree_zero_is_rejected() {
        let z4 = zmod(4).unwrap();
        assert!(matches!(check_right_mccoy(&z4, 0, &SearchLimits::default()), Err(Error::Usage(_))));
    }

    #[test]
    fn product_with_field_factor_has_universal_witness() {
        let f2 = prime_field(2).unwrap();
        let r = product(&[f2, mat(Family::UpperTriangular, 2)], &Limits::default()).unwrap();
        // (1, 0) is index 1
        assert_eq!(universal_witness(&r), Some(1));
        let v = check_right_central_mccoy(&r, 1, &SearchLimits::default()).unwrap();
        assert!(!v.is_refuted());
    }
}
