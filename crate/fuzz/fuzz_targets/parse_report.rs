#![no_main]

use libfuzzer_sys::fuzz_target;
use richardson_mult::{render_svg, MultiplicityReport, SvgContent};

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    let Ok(report) = MultiplicityReport::from_json(text) else { return };
    let json = report.to_json();
    let back = MultiplicityReport::from_json(&json).expect("rendered report reparses");
    assert_eq!(back.to_json(), json);
    let _ = report.to_text();
    if report.ambient() <= 64 {
        let _ = render_svg(&report, SvgContent::All);
    }
});
