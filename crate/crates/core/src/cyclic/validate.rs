use super::{for_each_instance, CyclicOperad};
use crate::collection::{validate_collection_as, Symmetry};
use crate::report::{CheckConfig, Law, Report};

/// Which flavor of cyclic operad to check against.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Variant {
    /// Identities required (false: the non-unital variant).
    pub unital: bool,
    /// Which permutations must act (cyclic: the non-symmetric variant).
    pub symmetry: Symmetry,
}

impl Variant {
    pub const CYCLIC: Variant = Variant {
        unital: true,
        symmetry: Symmetry::Full,
    };
    pub const MARKL: Variant = Variant {
        unital: false,
        symmetry: Symmetry::Full,
    };
    pub const NONSIGMA: Variant = Variant {
        unital: true,
        symmetry: Symmetry::Cyclic,
    };

    /// Laws checked for this variant, in report order.
    pub fn laws(self) -> Vec<Law> {
        let mut laws = vec![Law::Swap, Law::Associativity];
        laws.push(match self.symmetry {
            Symmetry::Full => Law::Equivariance,
            Symmetry::Cyclic => Law::CyclicEquivariance,
        });
        if self.unital {
            laws.extend([Law::Unit, Law::DerivedUnit, Law::RightUnit]);
        }
        laws.extend([Law::Reduction, Law::Rederivation]);
        laws
    }
}

/// Checks the collection laws and every axiom of `variant` on all instances
/// within `cfg.bound`.
pub fn validate<P: CyclicOperad + ?Sized>(p: &P, variant: Variant, cfg: &CheckConfig) -> Report {
    let mut report = validate_collection_as(p, variant.symmetry, cfg);
    if variant.unital {
        for c in p.colors().colors() {
            if !p.has_identities() || p.identity(c).is_err() {
                report.fail(Law::Unit, format!("no identity for color {c}"));
            }
        }
    }
    for law in variant.laws() {
        let mut listing = Report::new();
        let mut sub = Report::new();
        for_each_instance(p, law, variant.symmetry, cfg, &mut listing, |inst| inst.check(p, &mut sub));
        report.merge(listing);
        report.merge(sub);
    }
    report
}

/// Validator for (unital, symmetric) cyclic operads.
pub fn validate_cyclic<P: CyclicOperad + ?Sized>(p: &P, cfg: &CheckConfig) -> Report {
    validate(p, Variant::CYCLIC, cfg)
}

/// Validator for non-unital cyclic operads.
pub fn validate_markl<P: CyclicOperad + ?Sized>(p: &P, cfg: &CheckConfig) -> Report {
    validate(p, Variant::MARKL, cfg)
}

/// Validator for non-symmetric cyclic operads: only rotations act.
pub fn validate_nonsigma<P: CyclicOperad + ?Sized>(p: &P, cfg: &CheckConfig) -> Report {
    validate(p, Variant::NONSIGMA, cfg)
}
