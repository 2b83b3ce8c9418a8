//! Exhaustive suites at small arity and their schedule independence.

use junta_core::lp::BsBoundTable;
use junta_core::oracle::{
    enumerate_functions, run_suite, verify_fact5, verify_prop4, verify_sclaim, CheckRegistry,
};
use junta_core::wrec::{w_table, LpCaps, WBoundTable, WorstCaseCaps};

fn tables(n: u32) -> (Vec<WBoundTable>, BsBoundTable) {
    let bs = BsBoundTable::compute(n).unwrap();
    let lp = LpCaps::from_table(&bs);
    (
        vec![
            w_table(n, &WorstCaseCaps, true).unwrap(),
            w_table(n, &lp, true).unwrap(),
        ],
        bs,
    )
}

#[test]
fn arity_three_is_clean_and_complete() {
    let (w, bs) = tables(3);
    let r = run_suite(3, &w, &bs).unwrap();
    assert_eq!(r.functions_checked, 256);
    assert!(r.all_passed(), "{:?}", r.counterexamples);
    let names = CheckRegistry::standard().names();
    for n in &names {
        assert_eq!(r.checks[*n].passed, 256, "{n}");
    }
    assert_eq!(r.checks["tensorization"].passed, 256);
}

#[test]
fn report_is_schedule_independent() {
    let (w, bs) = tables(3);
    let run = |threads| {
        rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build()
            .unwrap()
            .install(|| run_suite(3, &w, &bs).unwrap())
    };
    let one = serde_json::to_string(&run(1)).unwrap();
    let many = serde_json::to_string(&run(8)).unwrap();
    assert_eq!(one, many);
}

#[test]
fn single_function_entry_points() {
    for f in enumerate_functions(3).unwrap() {
        assert!(verify_fact5(&f), "{f}");
        assert!(verify_sclaim(&f), "{f}");
        assert!(verify_prop4(&f), "{f}");
    }
}
