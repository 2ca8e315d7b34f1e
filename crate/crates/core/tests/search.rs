use symrank::construct::positive_rank2t_space;
use symrank::search::{max_constant_rank_dim, validate_witness, SearchMode, SearchSpec};
use symrank::{make_field, Limits};

#[test]
fn exhaustive_result_ignores_job_count() {
    let k = make_field(5, 1).unwrap();
    let mut outs = Vec::new();
    for jobs in [1, 4] {
        let mut spec = SearchSpec::new(&k, 3, 2, SearchMode::Plain);
        spec.jobs = jobs;
        outs.push(max_constant_rank_dim(&spec).unwrap());
    }
    assert_eq!(outs[0].best_dim, outs[1].best_dim);
    assert_eq!(outs[0].nodes_visited, outs[1].nodes_visited);
    assert_eq!(outs[0].witness, outs[1].witness);
}

#[test]
fn truncated_search_ignores_job_count() {
    let k = make_field(3, 1).unwrap();
    let mut outs = Vec::new();
    for jobs in [1, 3] {
        let mut spec = SearchSpec::new(&k, 4, 2, SearchMode::Plain);
        spec.budget = 5000;
        spec.jobs = jobs;
        outs.push(max_constant_rank_dim(&spec).unwrap());
    }
    assert!(!outs[0].exhaustive_proof);
    assert_eq!(outs[0].nodes_visited, 5000);
    assert_eq!(outs[0].best_dim, outs[1].best_dim);
    assert_eq!(outs[0].witness, outs[1].witness);
}

#[test]
fn proven_maximum_is_stable_under_larger_budget() {
    let k = make_field(3, 1).unwrap();
    let mut spec = SearchSpec::new(&k, 3, 2, SearchMode::Plain);
    let first = max_constant_rank_dim(&spec).unwrap();
    assert!(first.exhaustive_proof);
    spec.budget *= 2;
    let second = max_constant_rank_dim(&spec).unwrap();
    assert_eq!(first.best_dim, second.best_dim);
    assert_eq!(first.nodes_visited, second.nodes_visited);
}

#[test]
fn randomized_search_is_reproducible() {
    let k = make_field(5, 1).unwrap();
    let mut runs = Vec::new();
    for jobs in [1, 4] {
        let mut spec = SearchSpec::new(&k, 5, 4, SearchMode::AllPositive);
        spec.exhaustive = false;
        spec.budget = 20_000;
        spec.rng_seed = 11;
        spec.jobs = jobs;
        spec.seed = Some(positive_rank2t_space(&k, 5, 2).unwrap());
        runs.push(max_constant_rank_dim(&spec).unwrap());
    }
    assert_eq!(runs[0].best_dim, runs[1].best_dim);
    assert_eq!(runs[0].witness, runs[1].witness);
    let w = runs[0].witness.as_ref().unwrap();
    assert!(runs[0].best_dim >= 3);
    assert!(validate_witness(w, 4, SearchMode::AllPositive, &Limits::default()).unwrap());
}
