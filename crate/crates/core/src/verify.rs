//! Full consistency run: identity audit, route agreement, expansion
//! agreement and the record of known misprints.

use crate::bernoulli::{bernoulli2nd, bernoulli_closed, bernoulli_closed_printed, BernoulliRoute, ClosedKind, SecondKindRoute};
use crate::error::Result;
use crate::exact::{rat, Rational};
use crate::expansions::{coeffs, oracle_series, ExpansionId};
use crate::identities::{audit, conn_half_lhs, conn_half_rhs_printed, IdentityId, IdentityReport};

/// Deliberate corruption of one route, used to exercise failure reporting.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Fault {
    Route(BernoulliRoute),
    SecondKind(SecondKindRoute),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RouteCheck {
    pub sequence: &'static str,
    pub route: String,
    pub index: usize,
    pub value: Rational,
    pub expected: Rational,
    pub pass: bool,
    pub provenance: String,
}

/// A formula whose usual printed form disagrees with the reference value,
/// next to the corrected form.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TypoFinding {
    pub name: &'static str,
    pub provenance: &'static str,
    pub index: usize,
    pub expected: Rational,
    pub printed: Rational,
    pub corrected: Rational,
    pub correction: &'static str,
}

impl TypoFinding {
    pub fn printed_pass(&self) -> bool {
        self.printed == self.expected
    }

    pub fn corrected_pass(&self) -> bool {
        self.corrected == self.expected
    }

    /// The misprint is still reproduced and the fix still holds.
    pub fn confirmed(&self) -> bool {
        !self.printed_pass() && self.corrected_pass()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerifyReport {
    pub max_n: usize,
    pub r_set: Vec<Rational>,
    pub identities: IdentityReport,
    pub routes: Vec<RouteCheck>,
    pub typos: Vec<TypoFinding>,
}

impl VerifyReport {
    pub fn all_pass(&self) -> bool {
        self.identities.all_pass() && self.routes.iter().all(|c| c.pass) && self.typos.iter().all(|t| t.confirmed())
    }

    pub fn failed_routes(&self) -> impl Iterator<Item = &RouteCheck> {
        self.routes.iter().filter(|c| !c.pass)
    }
}

fn corrupt(value: Rational, hit: bool) -> Rational {
    if hit {
        value + rat(1)
    } else {
        value
    }
}

/// Every `B_{2k}` route against the baseline for `1 <= k <= max_k`.
pub fn bernoulli_route_checks(max_k: usize, fault: Option<Fault>) -> Result<Vec<RouteCheck>> {
    let mut out = Vec::new();
    for k in 1..=max_k {
        let expected = BernoulliRoute::Baseline.even_value(k)?;
        for route in BernoulliRoute::ALL.into_iter().skip(1) {
            let value = corrupt(route.even_value(k)?, fault == Some(Fault::Route(route)));
            out.push(RouteCheck {
                sequence: "bernoulli",
                route: route.name().to_string(),
                index: 2 * k,
                pass: value == expected,
                value,
                expected: expected.clone(),
                provenance: route.provenance().to_string(),
            });
        }
    }
    Ok(out)
}

/// Every `b_n` route against series division for `0 <= n <= max_n`.
pub fn second_kind_route_checks(max_n: usize, fault: Option<Fault>) -> Vec<RouteCheck> {
    let mut out = Vec::new();
    for n in 0..=max_n {
        let expected = bernoulli2nd(n, SecondKindRoute::FpsBaseline);
        for route in SecondKindRoute::ALL.into_iter().skip(1) {
            let value = corrupt(bernoulli2nd(n, route), fault == Some(Fault::SecondKind(route)));
            out.push(RouteCheck {
                sequence: "bernoulli2nd",
                route: route.name().to_string(),
                index: n,
                pass: value == expected,
                value,
                expected: expected.clone(),
                provenance: route.provenance().to_string(),
            });
        }
    }
    out
}

/// Every expansion variant against its series oracle through `order`.
pub fn expansion_checks(order: usize, r_set: &[Rational]) -> Result<Vec<RouteCheck>> {
    let mut out = Vec::new();
    for id in ExpansionId::ALL {
        let rs: Vec<Option<&Rational>> = if id.takes_r() { r_set.iter().map(Some).collect() } else { vec![None] };
        for r in rs {
            let oracle = oracle_series(id, r, order)?;
            for &variant in id.variants() {
                let values = coeffs(id, variant, order, r)?;
                for (n, value) in values.into_iter().enumerate() {
                    let expected = oracle.coeff(n);
                    let route = match r {
                        Some(r) => format!("{id}/{variant}@r={}", crate::exact::format_rational(r)),
                        None => format!("{id}/{variant}"),
                    };
                    out.push(RouteCheck {
                        sequence: "expansion",
                        route,
                        index: n,
                        pass: value == expected,
                        value,
                        expected,
                        provenance: id.provenance(variant)?.to_string(),
                    });
                }
            }
        }
    }
    Ok(out)
}

/// The three misprinted displays, evaluated at their first index.
pub fn typo_findings() -> Result<Vec<TypoFinding>> {
    let b2 = BernoulliRoute::Baseline.even_value(1)?;
    Ok(vec![
        TypoFinding {
            name: "closed_zeta_bell",
            provenance: BernoulliRoute::Closed(ClosedKind::ZetaBell).provenance(),
            index: 1,
            expected: b2.clone(),
            printed: bernoulli_closed_printed(1, ClosedKind::ZetaBell)?,
            corrected: bernoulli_closed(1, ClosedKind::ZetaBell)?,
            correction: "leading minus sign",
        },
        TypoFinding {
            name: "closed_s2",
            provenance: BernoulliRoute::Closed(ClosedKind::S2).provenance(),
            index: 1,
            expected: b2,
            printed: bernoulli_closed_printed(1, ClosedKind::S2)?,
            corrected: bernoulli_closed(1, ClosedKind::S2)?,
            correction: "factor (2k)!",
        },
        TypoFinding {
            name: "conn_half",
            provenance: IdentityId::ConnHalf.provenance(),
            index: 0,
            expected: conn_half_lhs(0),
            printed: conn_half_rhs_printed(0),
            corrected: -conn_half_rhs_printed(0),
            correction: "leading minus sign on the first-kind side",
        },
    ])
}

/// Runs everything for indices up to `max_n`.
pub fn verify(max_n: usize, r_set: &[Rational], fault: Option<Fault>) -> Result<VerifyReport> {
    let mut r_set = r_set.to_vec();
    r_set.sort();
    r_set.dedup();
    let identities = audit(max_n, &r_set);
    let mut routes = bernoulli_route_checks(max_n, fault)?;
    routes.extend(second_kind_route_checks(max_n, fault));
    routes.extend(expansion_checks(max_n, &r_set)?);
    Ok(VerifyReport { max_n, r_set, identities, routes, typos: typo_findings()? })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::ratio;
    use num_traits::Zero;

    #[test]
    fn small_run_passes() {
        let report = verify(3, &[ratio(-1, 2), rat(2)], None).unwrap();
        assert!(report.all_pass());
        assert!(!report.routes.is_empty());
    }

    #[test]
    fn typos_are_confirmed() {
        let typos = typo_findings().unwrap();
        assert_eq!(typos.len(), 3);
        for t in &typos {
            assert!(t.confirmed(), "{}", t.name);
        }
        assert_eq!(typos[0].printed, ratio(-1, 6));
        assert_eq!(typos[1].printed, ratio(1, 12));
    }

    #[test]
    fn fault_is_reported_by_route() {
        let route = BernoulliRoute::Rec(crate::bernoulli::RecKind::Logistic);
        let report = verify(2, &[], Some(Fault::Route(route))).unwrap();
        assert!(!report.all_pass());
        let failed: Vec<_> = report.failed_routes().collect();
        assert!(!failed.is_empty());
        assert!(failed.iter().all(|c| c.route == "rec_logistic"));
        assert!(!failed[0].value.is_zero() || !failed[0].expected.is_zero());
    }
}
