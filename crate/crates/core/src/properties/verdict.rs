use std::time::Duration;

use serde::{Deserialize, Serialize};

use crate::properties::poly::{poly_mul, Polynomial};
use crate::properties::{Property, Side};
use crate::ring::RingView;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Polarity {
    Refuted,
    NotRefuted,
}

/// What the verdict quantified over.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Bounds {
    pub max_degree: Option<usize>,
    /// Word-length window for witnesses in a truncated algebra.
    pub window: Option<usize>,
    /// Word-length window for polynomial coefficients in a truncated algebra.
    pub coefficient_window: Option<usize>,
    pub note: String,
}

impl Bounds {
    pub fn exact() -> Self {
        Self {
            max_degree: None,
            window: None,
            coefficient_window: None,
            note: "exact".into(),
        }
    }

    pub fn degree(d: usize, polarity: Polarity) -> Self {
        let note = match polarity {
            Polarity::Refuted => "exact refutation".into(),
            Polarity::NotRefuted => format!("holds for all pairs of degree <= {d}"),
        };
        Self {
            max_degree: Some(d),
            window: None,
            coefficient_window: None,
            note,
        }
    }
}

/// `u128` as a JSON number when it fits in `u64`, else as a decimal string.
/// Internally tagged enums buffer their fields, and the buffer has no
/// `u128` support.
mod wide {
    use std::fmt;

    use serde::de::{self, Visitor};
    use serde::{Deserializer, Serializer};

    pub fn serialize<S: Serializer>(v: &u128, s: S) -> Result<S::Ok, S::Error> {
        match u64::try_from(*v) {
            Ok(small) => s.serialize_u64(small),
            Err(_) => s.serialize_str(&v.to_string()),
        }
    }

    struct Wide;

    impl Visitor<'_> for Wide {
        type Value = u128;

        fn expecting(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
            f.write_str("a non-negative integer or decimal string")
        }

        fn visit_u64<E: de::Error>(self, v: u64) -> Result<u128, E> {
            Ok(v as u128)
        }

        fn visit_u128<E: de::Error>(self, v: u128) -> Result<u128, E> {
            Ok(v)
        }

        fn visit_i64<E: de::Error>(self, v: i64) -> Result<u128, E> {
            u128::try_from(v).map_err(E::custom)
        }

        fn visit_str<E: de::Error>(self, v: &str) -> Result<u128, E> {
            v.parse().map_err(E::custom)
        }
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<u128, D::Error> {
        d.deserialize_any(Wide)
    }
}

/// An element as canonical index plus structural form.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ElementRecord {
    #[serde(with = "wide")]
    pub index: u128,
    pub form: String,
}

impl ElementRecord {
    pub fn of<R: RingView + ?Sized>(r: &R, a: u32) -> Self {
        Self {
            index: a as u128,
            form: r.describe(a),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolyRecord {
    #[serde(with = "wide")]
    pub index: u128,
    pub coefficients: Vec<ElementRecord>,
    pub form: String,
}

impl PolyRecord {
    pub fn of<R: RingView + ?Sized>(r: &R, f: &Polynomial) -> Self {
        Self {
            index: f.index(r.size()),
            coefficients: f.coeffs().iter().map(|&c| ElementRecord::of(r, c)).collect(),
            form: f.render(r, "x"),
        }
    }

    fn decode(&self) -> Option<Polynomial> {
        let coeffs = self
            .coefficients
            .iter()
            .map(|c| u32::try_from(c.index).ok())
            .collect::<Option<Vec<u32>>>()?;
        Some(Polynomial::new(coeffs))
    }
}

/// Why the nonzero element `r` is not a witness.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WitnessFailure {
    pub r: ElementRecord,
    /// Least coefficient index whose product with `r` fails.
    pub coefficient: usize,
    /// `a_i r` (right) or `r b_j` (left).
    pub product: ElementRecord,
    /// Least `t` not commuting with `product`; absent for plain McCoy.
    pub t: Option<ElementRecord>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Transcript {
    /// One failure line per nonzero ring element.
    Exhaustive { failures: Vec<WitnessFailure> },
    /// Witness conditions form a linear system over a word window whose
    /// solution space is zero.
    Linear {
        window_words: usize,
        constraints: usize,
        rank: usize,
        witness_dim: usize,
    },
    /// A coefficient product outside the target set.
    Product {
        i: usize,
        j: usize,
        product: ElementRecord,
        t: Option<ElementRecord>,
    },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Certificate {
    Pair {
        f: PolyRecord,
        g: PolyRecord,
        transcript: Transcript,
    },
    Elements {
        law: String,
        elements: Vec<ElementRecord>,
    },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WitnessCount {
    pub witness: ElementRecord,
    pub carriers: u64,
}

/// Deterministic search-size statistics.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchStats {
    /// Nonzero polynomials (or elements) examined.
    pub candidates: u64,
    /// Candidates with at least one zero-divisor partner.
    pub zero_divisor_carriers: u64,
    /// Zero-divisor pairs in the search space.
    #[serde(with = "wide")]
    pub pairs: u128,
    /// Zero-divisor carriers that had no witness.
    pub witnessless_carriers: u64,
    /// Least witness per zero-divisor carrier, aggregated.
    pub witness_histogram: Vec<WitnessCount>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct Verdict {
    pub property: Property,
    pub ring: String,
    pub polarity: Polarity,
    pub bounds: Bounds,
    pub certificate: Option<Certificate>,
    pub universal_witness: Option<ElementRecord>,
    pub stats: SearchStats,
    #[serde(skip)]
    pub elapsed: Duration,
}

impl Verdict {
    pub fn is_refuted(&self) -> bool {
        self.polarity == Polarity::Refuted
    }

    /// Short display form, e.g. `REFUTED` or `NOT_REFUTED (d <= 2)`.
    pub fn summary(&self) -> String {
        let head = match self.polarity {
            Polarity::Refuted => "REFUTED",
            Polarity::NotRefuted => "NOT_REFUTED",
        };
        match (self.polarity, self.bounds.window, self.bounds.max_degree) {
            (Polarity::Refuted, Some(_), _) => "REFUTED (bounded witnesses)".into(),
            (Polarity::NotRefuted, Some(l), Some(d)) => format!("{head} (d <= {d}, window {l})"),
            (Polarity::NotRefuted, None, Some(d)) => format!("{head} (d <= {d})"),
            _ => head.into(),
        }
    }

    pub fn pair(&self) -> Option<(u128, u128)> {
        match &self.certificate {
            Some(Certificate::Pair { f, g, .. }) => Some((f.index, g.index)),
            _ => None,
        }
    }
}

fn element<R: RingView + ?Sized>(r: &R, rec: &ElementRecord) -> Result<u32, String> {
    let a = u32::try_from(rec.index).map_err(|_| format!("index {} out of range", rec.index))?;
    if a >= r.size() {
        return Err(format!("index {a} out of range"));
    }
    Ok(a)
}

fn check_noncommuting<R: RingView + ?Sized>(r: &R, a: u32, t: &Option<ElementRecord>) -> Result<(), String> {
    let t = t.as_ref().ok_or("missing commutation witness")?;
    let t = element(r, t)?;
    if r.mul_idx(a, t) == r.mul_idx(t, a) {
        return Err(format!("{} commutes with {}", r.describe(a), r.describe(t)));
    }
    Ok(())
}

/// Re-checks a refutation certificate against the ring from scratch.
pub fn verify_certificate<R: RingView + ?Sized>(r: &R, verdict: &Verdict) -> Result<(), String> {
    let Some(cert) = &verdict.certificate else {
        return match verdict.polarity {
            Polarity::Refuted => Err("REFUTED without certificate".into()),
            Polarity::NotRefuted => Ok(()),
        };
    };
    match cert {
        Certificate::Pair { f, g, transcript } => {
            let (pf, pg) = (
                f.decode().ok_or("bad coefficient index")?,
                g.decode().ok_or("bad coefficient index")?,
            );
            for c in pf.coeffs().iter().chain(pg.coeffs()) {
                if *c >= r.size() {
                    return Err(format!("coefficient {c} out of range"));
                }
            }
            if pf.is_zero() || pg.is_zero() {
                return Err("certificate polynomial is zero".into());
            }
            if pf.index(r.size()) != f.index || pg.index(r.size()) != g.index {
                return Err("polynomial index does not match coefficients".into());
            }
            if !poly_mul(r, &pf, &pg).is_zero() {
                return Err("f·g is not zero".into());
            }
            match transcript {
                Transcript::Exhaustive { failures } => {
                    let (side, central) = verdict
                        .property
                        .witness_shape()
                        .ok_or("witness transcript on a non-McCoy property")?;
                    let carrier = match side {
                        Side::Right => &pf,
                        Side::Left => &pg,
                    };
                    if failures.len() as u64 != r.size() as u64 - 1 {
                        return Err(format!("transcript has {} lines, expected {}", failures.len(), r.size() - 1));
                    }
                    for (k, line) in failures.iter().enumerate() {
                        let w = element(r, &line.r)?;
                        if w as usize != k + 1 {
                            return Err(format!("transcript line {k} is for element {w}"));
                        }
                        let c = carrier.coeff(line.coefficient);
                        let prod = match side {
                            Side::Right => r.mul_idx(c, w),
                            Side::Left => r.mul_idx(w, c),
                        };
                        if element(r, &line.product)? != prod {
                            return Err(format!("transcript line {k}: product mismatch"));
                        }
                        if central {
                            check_noncommuting(r, prod, &line.t)?;
                        } else if prod == 0 {
                            return Err(format!("transcript line {k}: product is zero"));
                        }
                    }
                    Ok(())
                }
                Transcript::Product { i, j, product, t } => {
                    let prod = r.mul_idx(pf.coeff(*i), pg.coeff(*j));
                    if element(r, product)? != prod {
                        return Err("coefficient product mismatch".into());
                    }
                    match verdict.property {
                        Property::CentralArmendariz => check_noncommuting(r, prod, t),
                        _ if prod == 0 => Err("coefficient product is zero".into()),
                        _ => Ok(()),
                    }
                }
                Transcript::Linear { .. } => Err("linear transcripts are checked against the truncated algebra".into()),
            }
        }
        Certificate::Elements { law, elements } => {
            let e = elements
                .iter()
                .map(|x| element(r, x))
                .collect::<Result<Vec<u32>, String>>()?;
            let ok = match (verdict.property, e.as_slice()) {
                (Property::Reversible, &[a, b]) => r.mul_idx(a, b) == 0 && r.mul_idx(b, a) != 0,
                (Property::Semicommutative, &[a, b, t]) => {
                    r.mul_idx(a, b) == 0 && r.mul_idx(r.mul_idx(a, t), b) != 0
                }
                (Property::Abelian, &[e, t]) => {
                    r.mul_idx(e, e) == e && r.mul_idx(e, t) != r.mul_idx(t, e)
                }
                (Property::Reduced, &[a]) => a != 0 && r.mul_idx(a, a) == 0,
                _ => false,
            };
            if ok {
                Ok(())
            } else {
                Err(format!("element certificate for `{law}` does not re-verify"))
            }
        }
    }
}
