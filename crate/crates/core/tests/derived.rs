use loopcoh::derived::{verify_derived, ResolutionParams};

#[test]
fn grid_up_to_three() {
    for (r, p, a) in [(1, 2, 2), (2, 2, 2), (2, 3, 2), (1, 3, 2), (1, 2, 4)] {
        let params = ResolutionParams::new(r, p, a).unwrap();
        let report = verify_derived(params, 3, params.default_cutoff()).unwrap();
        assert!(report.passes(), "({r},{p},{a}): {:?}", report.failures());
        assert!(report.warnings.is_empty(), "{:?}", report.warnings);
    }
}
