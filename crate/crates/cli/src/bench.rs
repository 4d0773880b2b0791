//! `gi bench`: every applicable solver on every instance of a directory.
//!
//! CSV columns: `instance,problem,rule,solver,outcome,witness,micros`.
//! `witness` is space-separated indices (empty unless the outcome is YES);
//! `outcome` is YES, NO, IMMUNE, ALREADY-QUALIFIED or LIMIT (brute force
//! refused the search size).

use std::fs;
use std::path::Path;
use std::time::Instant;

use gi_core::format::parse_instance;
use gi_core::{ControlInstance, Error, Solver, Strategy};

pub const COLUMNS: [&str; 7] = [
    "instance", "problem", "rule", "solver", "outcome", "witness", "micros",
];

fn csv_err(e: csv::Error) -> Error {
    Error::Input(format!("writing CSV: {e}"))
}

/// Instance files are all regular files in `dir`, in name order.
fn corpus(dir: &Path) -> Result<Vec<(String, ControlInstance)>, Error> {
    let io_err = |e: std::io::Error| Error::Input(format!("{}: {e}", dir.display()));
    let mut paths: Vec<_> = fs::read_dir(dir)
        .map_err(io_err)?
        .map(|entry| entry.map(|e| e.path()))
        .collect::<Result<_, _>>()
        .map_err(io_err)?;
    paths.retain(|p| p.is_file());
    paths.sort();
    paths
        .into_iter()
        .map(|path| {
            let text = fs::read_to_string(&path)
                .map_err(|e| Error::Input(format!("{}: {e}", path.display())))?;
            let inst = parse_instance(&text)
                .map_err(|e| Error::Input(format!("{}: {e}", path.display())))?;
            let name = path
                .file_name()
                .unwrap_or_default()
                .to_string_lossy()
                .into_owned();
            Ok((name, inst))
        })
        .collect()
}

pub fn run(dir: &Path, out: Option<&Path>, limit: u32) -> Result<(), Error> {
    let solver = Solver::new().with_brute_limit(limit);
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(COLUMNS).map_err(csv_err)?;
    for (name, inst) in corpus(dir)? {
        let strategies: Vec<Strategy> = if inst.already_qualified() {
            vec![Strategy::Auto]
        } else {
            Strategy::EXPLICIT
                .into_iter()
                .filter(|s| s.applies_to(&inst))
                .collect()
        };
        for strategy in strategies {
            let start = Instant::now();
            let result = solver.solve(&inst, strategy);
            let micros = start.elapsed().as_micros().to_string();
            let (tag, outcome, witness) = match result {
                Ok(v) => (
                    v.solver.to_string(),
                    v.outcome.to_string(),
                    v.witness.map(|u| {
                        u.iter()
                            .map(|i| i.to_string())
                            .collect::<Vec<_>>()
                            .join(" ")
                    }),
                ),
                Err(Error::Resource { .. }) => (strategy.to_string(), "LIMIT".to_string(), None),
                Err(e) => return Err(Error::Input(format!("{name}: {e}"))),
            };
            let problem = inst.problem().to_string();
            let rule = inst.rule().to_string();
            w.write_record([
                name.as_str(),
                problem.as_str(),
                rule.as_str(),
                tag.as_str(),
                outcome.as_str(),
                witness.as_deref().unwrap_or(""),
                micros.as_str(),
            ])
            .map_err(csv_err)?;
        }
    }
    let bytes = w
        .into_inner()
        .map_err(|e| Error::Input(format!("writing CSV: {e}")))?;
    crate::write_output(out, &String::from_utf8_lossy(&bytes))
}
