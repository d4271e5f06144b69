//! Runs one verification suite and prints its records as JSON lines, the
//! same records `weylphi verify --json` emits.

use weylphi::verify::{run, Options, Suite};

fn main() -> weylphi::Result<()> {
    let suite: Suite = std::env::args().nth(1).unwrap_or_else(|| "tables".into()).parse()?;
    let records = run(suite, &Options::default())?;
    for r in &records {
        println!("{}", serde_json::to_string(r)?);
    }
    Ok(())
}
