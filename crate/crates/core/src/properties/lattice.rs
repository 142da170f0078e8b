//! Implications between the properties, asserted in contrapositive-safe form
//! on bounded verdicts.

use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::properties::mccoy::{check, universal_witness};
use crate::properties::verdict::{verify_certificate, Certificate, Polarity, Transcript, Verdict};
use crate::properties::{Property, SearchLimits};
use crate::ring::RingView;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LatticeViolation {
    pub assertion: String,
    pub detail: String,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct LatticeAudit {
    pub ring: String,
    pub degrees: Vec<usize>,
    /// `(property, degree, summary)`; degree is absent for exact properties.
    pub verdicts: Vec<(Property, Option<usize>, String)>,
    pub assertions_checked: usize,
    /// Assertions that need an exact verdict and were skipped.
    pub skipped: Vec<String>,
    pub violations: Vec<LatticeViolation>,
}

struct Audit {
    checked: usize,
    violations: Vec<LatticeViolation>,
}

impl Audit {
    fn assert(&mut self, name: &str, holds: bool, detail: impl FnOnce() -> String) {
        self.checked += 1;
        if !holds {
            self.violations.push(LatticeViolation {
                assertion: name.into(),
                detail: detail(),
            });
        }
    }
}

/// Runs every property at every degree and checks the implication list.
pub fn audit_implications<R: RingView + ?Sized>(r: &R, degrees: &[usize], limits: &SearchLimits) -> Result<LatticeAudit> {
    let mut audit = Audit {
        checked: 0,
        violations: Vec::new(),
    };
    let mut verdicts = Vec::new();
    let exact: Vec<Verdict> = [
        Property::Reversible,
        Property::Semicommutative,
        Property::Abelian,
        Property::Reduced,
    ]
    .into_iter()
    .map(|p| check(r, p, 0, limits))
    .collect::<Result<_>>()?;
    let refuted = |p: Property| exact.iter().find(|v| v.property == p).expect("computed").is_refuted();
    for v in &exact {
        verdicts.push((v.property, None, v.summary()));
        let sound = verify_certificate(r, v);
        audit.assert("certificate re-verifies", sound.is_ok(), || {
            format!("{}: {}", v.property, sound.clone().unwrap_err())
        });
    }
    audit.assert("reduced => reversible", refuted(Property::Reduced) || !refuted(Property::Reversible), || {
        "reduced holds but reversible is refuted".into()
    });
    audit.assert(
        "reversible => semicommutative",
        refuted(Property::Reversible) || !refuted(Property::Semicommutative),
        || "reversible holds but semicommutative is refuted".into(),
    );

    let uw = universal_witness(r);
    let mut previous: Vec<Verdict> = Vec::new();
    for &d in degrees {
        let at_d: Vec<Verdict> = Property::ALL
            .into_iter()
            .filter(|p| p.is_degree_bounded())
            .map(|p| check(r, p, d, limits))
            .collect::<Result<_>>()?;
        let get = |p: Property| at_d.iter().find(|v| v.property == p).expect("computed");
        for v in &at_d {
            verdicts.push((v.property, Some(d), v.summary()));
            let sound = verify_certificate(r, v);
            audit.assert("certificate re-verifies", sound.is_ok(), || {
                format!("{} at d={d}: {}", v.property, sound.clone().unwrap_err())
            });
        }
        for (mccoy, central) in [
            (Property::RightMccoy, Property::RightCentralMccoy),
            (Property::LeftMccoy, Property::LeftCentralMccoy),
        ] {
            audit.assert(
                "reversible => McCoy",
                !get(mccoy).is_refuted() || refuted(Property::Reversible),
                || format!("{mccoy} refuted at d={d} but reversible holds"),
            );
            audit.assert(
                "McCoy => Central McCoy",
                !get(central).is_refuted() || get(mccoy).is_refuted(),
                || format!("{central} refuted at d={d} but {mccoy} is not"),
            );
            // a McCoy-refuting pair has some nonzero a_i b_j, else any nonzero
            // b_j (or a_i) would be a witness
            if let Some(Certificate::Pair { f, g, .. }) = &get(mccoy).certificate {
                let nonzero_product = f.coefficients.iter().any(|a| {
                    g.coefficients
                        .iter()
                        .any(|b| r.mul_idx(a.index as u32, b.index as u32) != 0)
                });
                audit.assert("Armendariz => McCoy", nonzero_product && get(Property::Armendariz).is_refuted(), || {
                    format!("{mccoy} pair at d={d} does not refute Armendariz")
                });
            }
        }
        audit.assert(
            "Armendariz => Central Armendariz",
            !get(Property::CentralArmendariz).is_refuted() || get(Property::Armendariz).is_refuted(),
            || format!("central-armendariz refuted at d={d} but armendariz is not"),
        );
        audit.assert(
            "universal witness => right Central McCoy",
            uw.is_none() || !get(Property::RightCentralMccoy).is_refuted(),
            || format!("universal witness exists but right-central-mccoy refuted at d={d}"),
        );
        for before in &previous {
            let now = get(before.property);
            let mut ok = !before.is_refuted() || now.is_refuted();
            // the lower-degree certificate stays admissible
            if let (Some(Certificate::Pair { transcript, .. }), true) = (&before.certificate, ok) {
                let mut lifted = before.clone();
                lifted.bounds.max_degree = Some(d);
                ok = matches!(transcript, Transcript::Linear { .. }) || verify_certificate(r, &lifted).is_ok();
            }
            audit.assert("degree monotonicity", ok, || {
                format!("{} refuted at a lower degree but not at d={d}", before.property)
            });
        }
        previous = at_d;
    }
    Ok(LatticeAudit {
        ring: r.label(),
        degrees: degrees.to_vec(),
        verdicts,
        assertions_checked: audit.checked,
        skipped: vec![
            "abelian refuted => central Armendariz fails: needs an exact central Armendariz verdict; bounded verdicts are excluded".into(),
        ],
        violations: audit.violations,
    })
}

impl LatticeAudit {
    pub fn polarity_of(&self, property: Property, degree: Option<usize>) -> Option<Polarity> {
        self.verdicts
            .iter()
            .find(|(p, d, _)| *p == property && *d == degree)
            .map(|(_, _, s)| {
                if s.starts_with("REFUTED") {
                    Polarity::Refuted
                } else {
                    Polarity::NotRefuted
                }
            })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{matrix_ring, prime_field, zmod, Family, Limits, MatrixShape};

    #[test]
    fn small_zoo_has_no_violations() {
        let l = SearchLimits::default();
        let t2 = matrix_ring(
            &MatrixShape::new(Family::UpperTriangular, 2, prime_field(2).unwrap()),
            &Limits::default(),
        )
        .unwrap();
        for audit in [
            audit_implications(&zmod(4).unwrap(), &[1, 2], &l).unwrap(),
            audit_implications(&t2, &[1, 2], &l).unwrap(),
        ] {
            assert!(audit.violations.is_empty(), "{:?}", audit.violations);
            assert!(audit.assertions_checked > 10);
        }
    }
}
