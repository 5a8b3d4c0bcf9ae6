//! Violation reports and validator configuration.

use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;

/// The law an instance was checked against.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Law {
    /// The support is closed under the permutation action.
    OrbitClosure,
    /// `id* = id`.
    ActionIdentity,
    /// `(σ′)*σ* = (σσ′)*`.
    ActionFunctoriality,
    /// A structure map could not be evaluated on a defined instance.
    Closure,
    /// C.1, the swap law.
    Swap,
    /// C.2, cyclic associativity.
    Associativity,
    /// C.3, equivariance under `Σₙ⁺ × Σₘ⁺`.
    Equivariance,
    /// C.4, unit laws and `τ* id_c = id_{c†}`.
    Unit,
    /// The `τ`-only equivariance law of the non-symmetric variant.
    CyclicEquivariance,
    /// `id_c ∘₁ⁱ x = (τⁱ)*x`.
    DerivedUnit,
    /// `x ∘ᵢ⁰ id = x`.
    RightUnit,
    /// Agreement of the three reductions of `∘ᵢʲ` to `∘ᵢ⁰`, `∘₀ʲ` and `∘₀⁰`.
    Reduction,
    /// Rebuilding `∘ᵢ⁰` from `∘₀⁰` reproduces the stored tables.
    Rederivation,
    OperadAssociativity,
    OperadUnit,
    OperadEquivariance,
    MorphismColors,
    MorphismEquivariance,
    MorphismUnit,
    MorphismComposition,
    Triangle,
    Naturality,
    /// `F` of a positivized `RO` is `FRO`.
    ForgetPositive,
}

impl Law {
    pub fn code(self) -> &'static str {
        match self {
            Law::OrbitClosure => "orbit-closure",
            Law::ActionIdentity => "action-identity",
            Law::ActionFunctoriality => "action-functoriality",
            Law::Closure => "closure",
            Law::Swap => "C1",
            Law::Associativity => "C2",
            Law::Equivariance => "C3",
            Law::Unit => "C4",
            Law::CyclicEquivariance => "NS3",
            Law::DerivedUnit => "derived-unit",
            Law::RightUnit => "right-unit",
            Law::Reduction => "reduction",
            Law::Rederivation => "rederivation",
            Law::OperadAssociativity => "operad-associativity",
            Law::OperadUnit => "operad-unit",
            Law::OperadEquivariance => "operad-equivariance",
            Law::MorphismColors => "morphism-colors",
            Law::MorphismEquivariance => "morphism-equivariance",
            Law::MorphismUnit => "morphism-unit",
            Law::MorphismComposition => "morphism-composition",
            Law::Triangle => "triangle",
            Law::Naturality => "naturality",
            Law::ForgetPositive => "forget-positive",
        }
    }
}

impl fmt::Display for Law {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.code())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub law: Law,
    pub instance: String,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}] {}", self.law, self.instance)
    }
}

/// Outcome of an exhaustive (or sampled) check. Empty violations means every
/// checked instance held.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Report {
    pub checked: u64,
    /// `checked`, split by law.
    pub checked_by_law: BTreeMap<Law, u64>,
    pub violations: Vec<Violation>,
}

impl Report {
    pub fn new() -> Self {
        Report::default()
    }

    pub fn is_clean(&self) -> bool {
        self.violations.is_empty()
    }

    /// Counts one instance and records it if it failed.
    pub fn check(&mut self, law: Law, holds: bool, instance: impl FnOnce() -> String) {
        self.checked += 1;
        *self.checked_by_law.entry(law).or_default() += 1;
        if !holds {
            self.violations.push(Violation {
                law,
                instance: instance(),
            });
        }
    }

    pub fn fail(&mut self, law: Law, instance: impl Into<String>) {
        self.checked += 1;
        *self.checked_by_law.entry(law).or_default() += 1;
        self.violations.push(Violation {
            law,
            instance: instance.into(),
        });
    }

    pub fn merge(&mut self, other: Report) {
        self.checked += other.checked;
        for (law, n) in other.checked_by_law {
            *self.checked_by_law.entry(law).or_default() += n;
        }
        self.violations.extend(other.violations);
    }

    /// Instances of `law` that were checked.
    pub fn checked_for(&self, law: Law) -> u64 {
        self.checked_by_law.get(&law).copied().unwrap_or(0)
    }

    /// Violations of `law`.
    pub fn count(&self, law: Law) -> usize {
        self.violations.iter().filter(|v| v.law == law).count()
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "{} instances checked, {} violations",
            self.checked,
            self.violations.len()
        )?;
        for v in &self.violations {
            writeln!(f, "  {v}")?;
        }
        Ok(())
    }
}

pub const DEFAULT_BOUND: usize = 4;

/// Knobs shared by all validators.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckConfig {
    /// Largest `‖c̲‖` of any profile touched by a checked instance.
    pub bound: usize,
    /// Entries at most this large are enumerated; larger ones are sampled.
    pub max_enumerate: u128,
    /// Elements drawn from an entry that is too large to enumerate.
    pub samples: usize,
    pub seed: u64,
    /// Equivariance is checked for every pair of permutations up to this
    /// arity, and for generators above it.
    pub full_symmetry_arity: usize,
}

impl Default for CheckConfig {
    fn default() -> Self {
        CheckConfig {
            bound: DEFAULT_BOUND,
            max_enumerate: 32,
            samples: 3,
            seed: 0x5eed,
            full_symmetry_arity: 2,
        }
    }
}

impl CheckConfig {
    pub fn with_bound(bound: usize) -> Self {
        CheckConfig {
            bound,
            ..CheckConfig::default()
        }
    }
}
