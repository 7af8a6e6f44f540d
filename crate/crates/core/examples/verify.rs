//! Run the verification suites from code and print line-delimited records.
//!
//! cargo run --release --example verify

use steinitz::suites::{run_suite, Status, Suite, SuiteConfig};

fn main() {
    let config = SuiteConfig { samples: 20, ..SuiteConfig::default() };
    for suite in Suite::ALL {
        let report = run_suite(suite, &config);
        for inst in &report.instances {
            println!("{}", serde_json::to_string(inst).expect("plain data"));
        }
        let status = report.status();
        println!("# {suite}: {status:?}");
        assert_eq!(status, Status::Pass);
    }
}
