//! On-disk partition tables: one file per (parts, n_max), a header line and
//! one decimal value per line.

use std::fs;
use std::path::{Path, PathBuf};

use partlab_core::exact::{count_table, PartitionTable};
use partlab_core::{ExactInt, PartSystem};

fn header(system: &PartSystem, n_max: usize) -> String {
    let parts: Vec<String> = system.parts().iter().map(|a| a.to_string()).collect();
    format!(
        "# partlab table k={} parts={} n_max={n_max}",
        system.k(),
        parts.join(",")
    )
}

fn file_name(system: &PartSystem, n_max: usize) -> String {
    let parts: Vec<String> = system.parts().iter().map(|a| a.to_string()).collect();
    format!("p_{}_{n_max}.txt", parts.join("-"))
}

fn load(path: &Path, system: &PartSystem, n_max: usize) -> Option<PartitionTable> {
    let text = fs::read_to_string(path).ok()?;
    let mut lines = text.lines();
    if lines.next()? != header(system, n_max) {
        return None;
    }
    let values: Vec<ExactInt> = lines.map(|l| l.parse().ok()).collect::<Option<_>>()?;
    if values.len() != n_max + 1 {
        return None;
    }
    PartitionTable::from_values(system.clone(), values).ok()
}

fn store(path: &Path, table: &PartitionTable) -> std::io::Result<()> {
    let mut text = header(table.system(), table.n_max());
    text.push('\n');
    for v in table.values() {
        text.push_str(&v.to_string());
        text.push('\n');
    }
    let tmp = path.with_extension("tmp");
    fs::write(&tmp, text)?;
    fs::rename(tmp, path)
}

/// The table for `system` up to `n_max`, read from or written to `dir` when given.
pub fn table(
    system: &PartSystem,
    n_max: usize,
    dir: Option<&Path>,
) -> std::io::Result<PartitionTable> {
    let Some(dir) = dir else {
        return Ok(count_table(system, n_max));
    };
    let path: PathBuf = dir.join(file_name(system, n_max));
    if let Some(t) = load(&path, system, n_max) {
        return Ok(t);
    }
    fs::create_dir_all(dir)?;
    let t = count_table(system, n_max);
    store(&path, &t)?;
    Ok(t)
}
