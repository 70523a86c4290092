#![no_main]

use libfuzzer_sys::fuzz_target;
use mldsurf::germfile::GermSpec;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    if let Ok(spec) = GermSpec::parse(text) {
        let again = GermSpec::parse(&spec.to_text()).expect("printed spec parses");
        assert_eq!(again, spec);
        let d = spec.model.solve_discrepancies();
        assert!(spec.model.residual(&d).iter().all(|r| *r == mldsurf::rational::qi(0)));
    }
});
