//! Emitters shared by the subcommands. Tables go to stdout in the
//! chosen format; findings are stderr JSON lines no matter what, so
//! piping stdout into another tool never swallows a counterexample.

use anyhow::Result;
use serde::Serialize;

use crate::Emit;

pub fn emit_rows<T: Serialize>(emit: Emit, rows: &[T]) -> Result<()> {
    match emit {
        Emit::Jsonl => {
            for row in rows {
                println!("{}", serde_json::to_string(row)?);
            }
        }
        Emit::Csv => {
            let mut w = csv::Writer::from_writer(std::io::stdout());
            for row in rows {
                w.serialize(row)?;
            }
            w.flush()?;
        }
    }
    Ok(())
}

pub fn emit_finding<T: Serialize>(row: &T) -> Result<()> {
    eprintln!("{}", serde_json::to_string(row)?);
    Ok(())
}

pub fn join_generators(gens: &[u64]) -> String {
    let strs: Vec<String> = gens.iter().map(|v| v.to_string()).collect();
    strs.join(" ")
}
