use semistar_core::classify::catalog::{instances, operations};
use semistar_core::classify::replay::{run_and_replay, Check};
use semistar_core::classify::SampleSpec;

#[test]
fn refutations_replay() {
    let spec = SampleSpec::default().with_count(60);
    for inst in instances() {
        for op in operations(&inst.domain) {
            for check in Check::ALL {
                let v = run_and_replay(check, &inst.domain, &op, &spec)
                    .unwrap_or_else(|e| panic!("{} {op} {check}: {e}", inst.name));
                println!("{} {op} {check}: {}", inst.name, v.outcome());
            }
        }
    }
}
