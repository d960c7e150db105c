use vparam_core::gadgets::{self, verify_identity, Gadget};
use vparam_core::reductions::{
    constructive_gamma, constructive_inddom, constructive_via_hereditary, trivial_start, value_from_decision,
};
use vparam_core::{as_decision, generators, ExactSolver, Graph, ParameterKind, Unlimited, ValueOracle};

fn graphs(count: u64, max_n: usize, salt: u64) -> impl Iterator<Item = Graph> {
    (0..count).map(move |seed| {
        let n = 1 + (seed as usize % max_n);
        generators::gnp(n, [0.25, 0.5, 0.75][(seed % 3) as usize], salt + seed)
    })
}

#[test]
fn binary_search_recovers_every_parameter() {
    let exact = ExactSolver::default();
    for g in graphs(40, 10, 0) {
        for kind in ParameterKind::ALL {
            let oracle = ValueOracle::exact(kind, exact);
            let decision = as_decision(&oracle, kind.direction());
            let (start, range) = trivial_start(&g, kind);
            let (value, trace) = value_from_decision(&g, &decision, kind.direction(), start, range).unwrap();
            assert_eq!(value as usize, exact.value(&g, kind, &Unlimited).unwrap(), "{kind} on {g:?}");
            assert!(trace.within_bound(), "{kind}: {trace:?}");
            assert_eq!(trace.oracle_calls, oracle.calls());
        }
    }
}

#[test]
fn constructive_reductions_certify_optima() {
    let exact = ExactSolver::default();
    for g in graphs(40, 9, 500) {
        for kind in [
            ParameterKind::MaxIndependentSet,
            ParameterKind::MaxClique,
            ParameterKind::MinVertexCover,
            ParameterKind::MinFeedbackVertexSet,
        ] {
            let oracle = match kind {
                ParameterKind::MinVertexCover => ValueOracle::exact(ParameterKind::MaxIndependentSet, exact),
                ParameterKind::MinFeedbackVertexSet => ValueOracle::exact_induced_forest(exact),
                _ => ValueOracle::exact(kind, exact),
            };
            let (sol, trace) = constructive_via_hereditary(&g, &oracle, kind).unwrap();
            assert!(sol.certified);
            assert_eq!(sol.value, exact.value(&g, kind, &Unlimited).unwrap());
            assert!(trace.oracle_calls <= g.n() + 1);
        }

        let oracle = ValueOracle::exact(ParameterKind::MinDominatingSet, exact).with_logging();
        let (sol, trace) = constructive_gamma(&g, &oracle).unwrap();
        let gamma = exact.value(&g, ParameterKind::MinDominatingSet, &Unlimited).unwrap();
        assert!(sol.certified && sol.value == gamma);
        assert!(trace.oracle_calls <= g.n() * gamma + 1);
        for call in oracle.call_log() {
            assert!(call.instance_size <= 2 * g.n());
            assert!(call.answer.unwrap() <= gamma + 1);
        }

        let oracle = ValueOracle::exact(ParameterKind::MinIndependentDominatingSet, exact);
        let (sol, trace) = constructive_inddom(&g, &oracle).unwrap();
        assert!(sol.certified);
        assert_eq!(sol.value, exact.value(&g, ParameterKind::MinIndependentDominatingSet, &Unlimited).unwrap());
        assert!(trace.within_bound());
    }
}

#[test]
fn gadget_identities_on_random_graphs() {
    for (seed, g) in graphs(30, 6, 900).enumerate() {
        let seed = seed as u64;
        let n = g.n();
        let vprime = generators::random_subset(n, seed);
        let k = 1 + (seed as usize % n);
        let coloring = generators::random_coloring(n, k, seed);
        let list = [
            Gadget::AddDominatingVertex,
            Gadget::DoubleCopy,
            Gadget::PendantMatching { vprime },
            Gadget::EdgeProduct,
            Gadget::CliqueBlowup { k: None },
            Gadget::PruneMonochromatic { coloring, k },
        ];
        for gadget in list {
            let report = verify_identity(&gadget, &g, &Unlimited).unwrap();
            assert!(report.all_hold, "{report:#?}");
        }
    }
}

#[test]
fn apex_structure() {
    for g in graphs(30, 8, 1300) {
        assert!(gadgets::add_dominating_vertex(&g).unwrap().has_universal_vertex());
        assert!(!gadgets::double_copy_gadget(&g).unwrap().has_universal_vertex());
        let k = 1 + g.n() / 2;
        let coloring = generators::random_coloring(g.n(), k, g.fingerprint());
        let pruned = gadgets::prune_monochromatic_edges(&g, &coloring, k).unwrap();
        assert!(pruned.edges().all(|(u, v)| coloring[u] != coloring[v]));
    }
}
