#![no_main]

use libfuzzer_sys::fuzz_target;
use mldsurf::BranchCluster;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    if let Ok(c) = BranchCluster::parse(text) {
        assert_eq!(BranchCluster::parse(&c.to_string()).expect("printed cluster parses"), c);
        let smooth = BranchCluster::smooth();
        assert!(c.local_intersection(&smooth) >= u64::from(c.multiplicity()));
    }
});
