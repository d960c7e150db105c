//! The classical chain `α + τ = n`, `α ≥ i ≥ γ`, `Δ + 1 ≥ χ ≥ ω`, `τ ≥ ν`.

use alloc::vec::Vec;
use core::fmt;

use crate::graph::ParameterKind;

/// All seven parameter values of one graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct ParameterValues {
    pub alpha: usize,
    pub tau: usize,
    pub omega: usize,
    pub chi: usize,
    pub gamma: usize,
    pub inddom: usize,
    pub nu: usize,
}

impl ParameterValues {
    pub fn get(&self, kind: ParameterKind) -> usize {
        match kind {
            ParameterKind::MaxIndependentSet => self.alpha,
            ParameterKind::MinVertexCover => self.tau,
            ParameterKind::MaxClique => self.omega,
            ParameterKind::ChromaticNumber => self.chi,
            ParameterKind::MinDominatingSet => self.gamma,
            ParameterKind::MinIndependentDominatingSet => self.inddom,
            ParameterKind::MinFeedbackVertexSet => self.nu,
        }
    }

    pub fn set(&mut self, kind: ParameterKind, value: usize) {
        let slot = match kind {
            ParameterKind::MaxIndependentSet => &mut self.alpha,
            ParameterKind::MinVertexCover => &mut self.tau,
            ParameterKind::MaxClique => &mut self.omega,
            ParameterKind::ChromaticNumber => &mut self.chi,
            ParameterKind::MinDominatingSet => &mut self.gamma,
            ParameterKind::MinIndependentDominatingSet => &mut self.inddom,
            ParameterKind::MinFeedbackVertexSet => &mut self.nu,
        };
        *slot = value;
    }

    /// Builds from `(kind, value)` pairs; `None` unless all seven kinds occur.
    pub fn from_pairs<I: IntoIterator<Item = (ParameterKind, usize)>>(pairs: I) -> Option<Self> {
        let mut values = ParameterValues::default();
        let mut seen = [false; 7];
        for (kind, value) in pairs {
            values.set(kind, value);
            seen[kind as usize] = true;
        }
        seen.iter().all(|&s| s).then_some(values)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Relation {
    /// `α + τ = n`
    AlphaPlusTauIsN,
    /// `α ≥ i ≥ γ`
    AlphaGeIGeGamma,
    /// `Δ + 1 ≥ χ ≥ ω`
    DeltaPlusOneGeChiGeOmega,
    /// `τ ≥ ν`
    TauGeNu,
}

impl Relation {
    pub const ALL: [Relation; 4] = [
        Relation::AlphaPlusTauIsN,
        Relation::AlphaGeIGeGamma,
        Relation::DeltaPlusOneGeChiGeOmega,
        Relation::TauGeNu,
    ];

    pub fn holds(self, v: &ParameterValues, n: usize, max_degree: usize) -> bool {
        match self {
            Relation::AlphaPlusTauIsN => v.alpha + v.tau == n,
            Relation::AlphaGeIGeGamma => v.alpha >= v.inddom && v.inddom >= v.gamma,
            Relation::DeltaPlusOneGeChiGeOmega => max_degree + 1 >= v.chi && v.chi >= v.omega,
            Relation::TauGeNu => v.tau >= v.nu,
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Relation::AlphaPlusTauIsN => "alpha+tau=n",
            Relation::AlphaGeIGeGamma => "alpha>=i>=gamma",
            Relation::DeltaPlusOneGeChiGeOmega => "delta+1>=chi>=omega",
            Relation::TauGeNu => "tau>=nu",
        }
    }
}

impl fmt::Display for Relation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// The relations of the chain that fail for `values` on a graph with `n`
/// vertices and maximum degree `max_degree`.
pub fn parameter_inequalities(values: &ParameterValues, n: usize, max_degree: usize) -> Vec<Relation> {
    Relation::ALL
        .into_iter()
        .filter(|r| !r.holds(values, n, max_degree))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    const C5: ParameterValues = ParameterValues { alpha: 2, tau: 3, omega: 2, chi: 3, gamma: 2, inddom: 2, nu: 1 };

    #[test]
    fn c5_values_hold() {
        assert!(parameter_inequalities(&C5, 5, 2).is_empty());
    }

    #[test]
    fn k1_values_hold() {
        let k1 = ParameterValues { alpha: 1, tau: 0, omega: 1, chi: 1, gamma: 1, inddom: 1, nu: 0 };
        assert!(parameter_inequalities(&k1, 1, 0).is_empty());
    }

    #[test]
    fn broken_tau_is_reported() {
        let broken = ParameterValues { tau: 0, ..C5 };
        assert_eq!(parameter_inequalities(&broken, 5, 2), vec![Relation::AlphaPlusTauIsN, Relation::TauGeNu]);
    }

    #[test]
    fn empty_graph_is_vacuous() {
        assert!(parameter_inequalities(&ParameterValues::default(), 0, 0).is_empty());
    }

    #[test]
    fn from_pairs_requires_all_seven() {
        let pairs: Vec<_> = ParameterKind::ALL.iter().map(|&k| (k, C5.get(k))).collect();
        assert_eq!(ParameterValues::from_pairs(pairs.iter().copied()), Some(C5));
        assert_eq!(ParameterValues::from_pairs(pairs[..6].iter().copied()), None);
    }
}
