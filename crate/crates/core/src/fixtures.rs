//! The acceptance fixture set: factor groups, quotient certificates for
//! `m = 1..=8` on each fixture pair, and refutations of the named
//! candidates and the candidate family.

use std::fs;
use std::io;
use std::path::{Path, PathBuf};

use crate::config::RunConfig;
use crate::group::library::klein_four;
use crate::group::FreeProduct;
use crate::refute::fixtures::{candidate_family, d4_reflections, fixture_pairs, klein_inclusions, trivial_candidate};
use crate::refute::{refute, OracleOptions, RefuteError};
use crate::separation::build_quotient;

pub const FIXTURE_MAX_M: u64 = 8;

/// A file of the fixture set, with a path relative to the output directory.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FixtureFile {
    pub path: String,
    pub contents: String,
}

fn json<T: serde::Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("fixtures serialize");
    s.push('\n');
    s
}

pub fn fixture_set(config: &RunConfig, max_m: u64) -> Result<Vec<FixtureFile>, RefuteError> {
    let mut files = Vec::new();
    let mut push = |path: String, contents: String| files.push(FixtureFile { path, contents });

    for (name, g, h) in fixture_pairs() {
        push(format!("groups/{name}_G.json"), json(&g));
        push(format!("groups/{name}_H.json"), json(&h));
        let fp = FreeProduct::new(g, h);
        for m in 1..=max_m {
            let cert = build_quotient(&fp, 1, 1, m, config)?;
            push(format!("quotients/{name}_m{m}.json"), json(&cert));
        }
    }

    let mut candidates = vec![
        ("klein_inclusions".to_string(), klein_inclusions()),
        ("d4_reflections".to_string(), d4_reflections()),
    ];
    let pairs = fixture_pairs();
    let (_, g, h) = &pairs[0];
    candidates.push((
        "trivial_images".to_string(),
        trivial_candidate(g.clone(), h.clone(), klein_four()),
    ));
    candidates.extend(candidate_family());
    for (name, candidate) in candidates {
        let both_order_two = candidate.g().order() == 2 && candidate.h().order() == 2;
        let oracles = OracleOptions {
            dihedral: both_order_two,
            ..OracleOptions::default()
        };
        let cert = refute(&candidate, None, config, &oracles)?;
        push(format!("candidates/{name}.json"), json(&candidate.to_spec()));
        push(format!("refutations/{name}.json"), json(&cert));
    }
    Ok(files)
}

/// Writes the fixture set under `dir`, creating subdirectories as needed.
pub fn write_fixture_set(dir: &Path, files: &[FixtureFile]) -> io::Result<Vec<PathBuf>> {
    files
        .iter()
        .map(|f| {
            let path = dir.join(&f.path);
            if let Some(parent) = path.parent() {
                fs::create_dir_all(parent)?;
            }
            fs::write(&path, &f.contents)?;
            Ok(path)
        })
        .collect()
}
