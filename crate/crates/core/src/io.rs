//! On-disk formats: radix systems and clopen sets as JSON, groups and
//! homomorphisms as whitespace tables, towers as manifest directories.

use std::fs;
use std::path::Path;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::clopen::{ClopenInterval, ClopenSet};
use crate::group::{FiniteGroup, GroupDefect, GroupHom, HomDefect, Tower, TowerDefect};
use crate::radix::{LevelPoint, RadixSystem};

#[derive(Debug, Error)]
pub enum IoError {
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error("json: {0}")]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Domain(#[from] crate::error::Error),
    #[error("group table: {0}")]
    Group(#[from] GroupDefect),
    #[error("homomorphism: {0}")]
    Hom(#[from] HomDefect),
    #[error("tower: {0}")]
    Tower(#[from] TowerDefect),
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
}

pub type IoResult<T> = std::result::Result<T, IoError>;

fn parse_err<T>(line: usize, message: impl Into<String>) -> IoResult<T> {
    Err(IoError::Parse {
        line,
        message: message.into(),
    })
}

// ---- radix systems: JSON objects {"preperiod": [...], "period": [...]} ----

pub fn radix_system_from_json(json: &str) -> IoResult<RadixSystem> {
    Ok(serde_json::from_str(json)?)
}

pub fn radix_system_to_json(sys: &RadixSystem) -> String {
    serde_json::to_string(sys).expect("radix system serializes")
}

pub fn load_radix_system(path: &Path) -> IoResult<RadixSystem> {
    radix_system_from_json(&fs::read_to_string(path)?)
}

// ---- clopen sets: JSON arrays of {"lo": [...], "hi": [...], "level": n} ----

#[derive(Serialize, Deserialize)]
struct RawInterval {
    lo: Vec<u64>,
    hi: Vec<u64>,
    level: u64,
}

/// Read a set as the union of the listed intervals; levels may differ and
/// the result is canonical at the finest one.
pub fn clopen_set_from_json(sys: &RadixSystem, json: &str) -> IoResult<ClopenSet> {
    let raw: Vec<RawInterval> = serde_json::from_str(json)?;
    let mut set = ClopenSet::empty(sys.clone(), 1);
    for iv in raw {
        if iv.lo.len() as u64 != iv.level || iv.hi.len() as u64 != iv.level {
            return parse_err(0, "interval endpoints must have `level` digits");
        }
        let lo = LevelPoint::new(sys.clone(), iv.lo)?;
        let hi = LevelPoint::new(sys.clone(), iv.hi)?;
        let interval = ClopenInterval::new(lo, hi)?;
        let one = ClopenSet::from_intervals(sys.clone(), iv.level, vec![interval])?;
        set = set.union(&one)?;
    }
    Ok(set)
}

pub fn clopen_set_to_json(set: &ClopenSet) -> String {
    let raw: Vec<RawInterval> = set
        .intervals()
        .iter()
        .map(|iv| RawInterval {
            lo: iv.lo().digits().to_vec(),
            hi: iv.hi().digits().to_vec(),
            level: set.level(),
        })
        .collect();
    serde_json::to_string(&raw).expect("clopen set serializes")
}

pub fn load_clopen_set(sys: &RadixSystem, path: &Path) -> IoResult<ClopenSet> {
    clopen_set_from_json(sys, &fs::read_to_string(path)?)
}

// ---- groups: first line "order identity", then the Cayley table ----

pub fn group_from_text(text: &str) -> IoResult<FiniteGroup> {
    let mut lines = text.lines().enumerate().filter(|(_, l)| !l.trim().is_empty());
    let (line_no, header) = match lines.next() {
        Some(pair) => pair,
        None => return parse_err(1, "empty group file"),
    };
    let fields: Vec<&str> = header.split_whitespace().collect();
    if fields.len() != 2 {
        return parse_err(line_no + 1, "header must be `order identity`");
    }
    let order: usize = match fields[0].parse() {
        Ok(v) => v,
        Err(_) => return parse_err(line_no + 1, "bad order"),
    };
    let identity: usize = match fields[1].parse() {
        Ok(v) => v,
        Err(_) => return parse_err(line_no + 1, "bad identity index"),
    };
    let mut table = Vec::with_capacity(order * order);
    for _ in 0..order {
        let (line_no, row) = match lines.next() {
            Some(pair) => pair,
            None => return parse_err(0, format!("expected {order} table rows")),
        };
        let entries: Vec<&str> = row.split_whitespace().collect();
        if entries.len() != order {
            return parse_err(line_no + 1, format!("row needs {order} entries"));
        }
        for e in entries {
            match e.parse::<usize>() {
                Ok(v) => table.push(v),
                Err(_) => return parse_err(line_no + 1, "bad table entry"),
            }
        }
    }
    Ok(FiniteGroup::new(order, identity, table)?)
}

pub fn group_to_text(group: &FiniteGroup) -> String {
    let n = group.order();
    let mut out = format!("{} {}\n", n, group.identity());
    for a in 0..n {
        let row: Vec<String> = (0..n).map(|b| group.op(a, b).to_string()).collect();
        out.push_str(&row.join(" "));
        out.push('\n');
    }
    out
}

// ---- homomorphisms: one line of |source| target indices ----

pub fn hom_from_text(text: &str, source: FiniteGroup, target: FiniteGroup) -> IoResult<GroupHom> {
    let mut map = Vec::with_capacity(source.order());
    for field in text.split_whitespace() {
        match field.parse::<usize>() {
            Ok(v) => map.push(v),
            Err(_) => return parse_err(1, "bad map entry"),
        }
    }
    Ok(GroupHom::new(source, target, map)?)
}

pub fn hom_to_text(hom: &GroupHom) -> String {
    let entries: Vec<String> = hom.map().iter().map(|v| v.to_string()).collect();
    let mut out = entries.join(" ");
    out.push('\n');
    out
}

// ---- towers: a directory with a manifest naming the files in order ----

#[derive(Serialize, Deserialize)]
struct TowerManifest {
    levels: Vec<String>,
    steps: Vec<String>,
}

/// Load `tower.json` from `dir`, then the group and step files it names,
/// validating the assembled tower.
pub fn load_tower(dir: &Path) -> IoResult<Tower> {
    let manifest: TowerManifest = serde_json::from_str(&fs::read_to_string(dir.join("tower.json"))?)?;
    let mut levels = Vec::with_capacity(manifest.levels.len());
    for name in &manifest.levels {
        levels.push(group_from_text(&fs::read_to_string(dir.join(name))?)?);
    }
    if manifest.steps.len() + 1 != manifest.levels.len() {
        return Err(IoError::Tower(TowerDefect::BadStepCount {
            levels: manifest.levels.len(),
            expected: manifest.levels.len().saturating_sub(1),
            found: manifest.steps.len(),
        }));
    }
    let mut steps = Vec::with_capacity(manifest.steps.len());
    for (k, name) in manifest.steps.iter().enumerate() {
        let text = fs::read_to_string(dir.join(name))?;
        steps.push(hom_from_text(&text, levels[k + 1].clone(), levels[k].clone())?);
    }
    Ok(Tower::new(levels, steps)?)
}

/// Write a tower as `level1.grp, ...`, `step1.hom, ...` and `tower.json`.
pub fn save_tower(dir: &Path, tower: &Tower) -> IoResult<()> {
    fs::create_dir_all(dir)?;
    let mut manifest = TowerManifest {
        levels: Vec::new(),
        steps: Vec::new(),
    };
    for (i, group) in tower.levels().iter().enumerate() {
        let name = format!("level{}.grp", i + 1);
        fs::write(dir.join(&name), group_to_text(group))?;
        manifest.levels.push(name);
    }
    for (i, hom) in tower.steps().iter().enumerate() {
        let name = format!("step{}.hom", i + 1);
        fs::write(dir.join(&name), hom_to_text(hom))?;
        manifest.steps.push(name);
    }
    fs::write(
        dir.join("tower.json"),
        serde_json::to_string_pretty(&manifest)?,
    )?;
    Ok(())
}
