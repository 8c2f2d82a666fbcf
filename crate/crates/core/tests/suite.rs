use semistar_core::classify::catalog::{instances, operations};
use semistar_core::classify::suite::{suite_passes, theorem_suite, LineStatus};
use semistar_core::classify::SampleSpec;

#[test]
fn no_implication_is_violated() {
    let spec = SampleSpec::default().with_count(40);
    let mut failures = Vec::new();
    for inst in instances() {
        for op in operations(&inst.domain) {
            let lines = theorem_suite(&inst.domain, &op, &spec);
            let confirmed = lines.iter().filter(|l| l.status == LineStatus::Confirmed).count();
            println!("{} {op}: {} lines, {confirmed} confirmed", inst.name, lines.len());
            if !suite_passes(&lines) {
                for l in lines.iter().filter(|l| l.status == LineStatus::Fail) {
                    failures.push(format!("{} {op}: {l}", inst.name));
                }
            }
        }
    }
    assert!(failures.is_empty(), "{}", failures.join("\n"));
}
