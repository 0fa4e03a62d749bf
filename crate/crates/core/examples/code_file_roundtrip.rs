//! Writes a searched code to the text format, reads it back and drives
//! the command-line layer in-process.

use std::sync::Arc;

use nbstab::cli::{run, CommandRequest, Subcommand};
use nbstab::finite_field::FieldCtx;
use nbstab::symplectic_code::{read_code, search_selforthogonal, write_code, SearchOptions};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let f9 = Arc::new(FieldCtx::new(3, 2, None)?);
    let code = search_selforthogonal(f9, 2, 3, 1, 4, &SearchOptions::default())?;
    let dir = std::env::temp_dir().join("nbstab-example");
    std::fs::create_dir_all(&dir)?;
    let path = dir.join("f9.code");
    write_code(&path, &code)?;
    assert_eq!(read_code(&path)?, code);
    print!("{}", std::fs::read_to_string(&path)?);

    for sub in [Subcommand::VerifyClassical, Subcommand::Params] {
        let mut req = CommandRequest::new(sub);
        req.input_path = Some(path.clone());
        let out = run(&req);
        print!("{}", out.report);
        println!("exit {}\n", out.exit_code);
    }
    Ok(())
}
