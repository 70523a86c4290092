#![no_main]

use libfuzzer_sys::fuzz_target;
use mldsurf::catalog;
use mldsurf::script::Script;
use mldsurf::BlowupTower;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    let Ok(script) = Script::parse(text) else { return };
    if script.steps.len() > 12 {
        return;
    }
    for germ in [catalog::kawakita(), catalog::c_type(1), catalog::d(4)] {
        if let Ok(t) = script.apply(&BlowupTower::new(&germ)) {
            assert_eq!(t.ledger(), t.pullback_coefficients().expect("negative definite"));
        }
    }
});
