use std::fs::File;
use std::io::BufReader;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use rainbow_graphs::graph::{is_rainbow, read_edge_list};
use rainbow_graphs::oracles::exact_max_rainbow_tree;
use serde_json::Value;

fn fixtures() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/fixtures")
}

fn rainbow(args: &[&str], dir: &Path) -> Output {
    Command::new(env!("CARGO_BIN_EXE_rainbow")).args(args).current_dir(dir).output().unwrap()
}

fn scratch(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("rainbow-cli-{name}-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    dir
}

#[test]
fn greedy_rdfs_matches_golden_output() {
    for name in ["rainbow_path", "mono_k4", "hexagon_chords", "gnp8"] {
        let input = format!("{name}.txt");
        let out = rainbow(&["find", "--finder", "rdfs", "--mode", "greedy", "--input", &input], &fixtures());
        assert_eq!(out.status.code(), Some(0), "{name}");
        let golden = std::fs::read(fixtures().join(format!("{name}.rdfs.json"))).unwrap();
        assert_eq!(out.stdout, golden, "{name}");

        // The reported path must be a rainbow path of the fixture, no longer
        // than the best rainbow tree.
        let g = read_edge_list(BufReader::new(File::open(fixtures().join(&input)).unwrap())).unwrap();
        let record: Value = serde_json::from_slice(&out.stdout).unwrap();
        let path: Vec<u32> = record["path"].as_array().unwrap().iter().map(|v| v.as_u64().unwrap() as u32).collect();
        let ids: Vec<usize> = path
            .windows(2)
            .map(|w| (0..g.edge_count()).find(|&id| g.edge(id).key() == (w[0].min(w[1]), w[0].max(w[1]))).unwrap())
            .collect();
        assert!(is_rainbow(&g, &ids), "{name}");
        let mut seen = path.clone();
        seen.sort();
        seen.dedup();
        assert_eq!(seen.len(), path.len(), "{name}: path repeats a vertex");
        let optimum = exact_max_rainbow_tree(&g).unwrap().len() + 1;
        assert!(path.len() <= optimum, "{name}");
    }
}

#[test]
fn exit_codes() {
    let dir = fixtures();
    assert_eq!(rainbow(&["gen", "--model", "forest", "--m", "5", "--t", "2"], &dir).status.code(), Some(0));
    // a tree has an empty 2-core
    assert_eq!(rainbow(&["find", "--finder", "super", "--input", "rainbow_path.txt"], &dir).status.code(), Some(2));
    assert_eq!(rainbow(&["gen", "--model", "nonsense"], &dir).status.code(), Some(64));
    assert_eq!(rainbow(&["gen", "--model", "gnp", "--n", "5", "--p", "0.1", "--d", "2"], &dir).status.code(), Some(64));
    assert_eq!(rainbow(&["find", "--finder", "sub", "--input", "missing.txt"], &dir).status.code(), Some(74));
    assert_eq!(rainbow(&["--help"], &dir).status.code(), Some(0));
}

#[test]
fn generated_graph_round_trips_through_find() {
    let dir = scratch("roundtrip");
    let out = rainbow(&["gen", "--model", "gnp", "--n", "2000", "--d", "1.5", "--c", "2000", "--seed", "9", "--out", "g.txt"], &dir);
    assert_eq!(out.status.code(), Some(0));
    let summary: Value = serde_json::from_slice(&out.stdout).unwrap();
    let g = read_edge_list(BufReader::new(File::open(dir.join("g.txt")).unwrap())).unwrap();
    assert_eq!(summary["edges"].as_u64().unwrap() as usize, g.edge_count());

    let from_file = rainbow(&["find", "--finder", "super", "--input", "g.txt"], &dir);
    let direct = rainbow(&["find", "--finder", "super", "--n", "2000", "--d", "1.5", "--c", "2000", "--seed", "9"], &dir);
    let a: Value = serde_json::from_slice(&from_file.stdout).unwrap();
    let b: Value = serde_json::from_slice(&direct.stdout).unwrap();
    assert_eq!(a["order"], b["order"]);
    assert_eq!(a["report"], b["report"]);
    std::fs::remove_dir_all(&dir).ok();
}

#[test]
fn seed_can_come_from_the_environment() {
    let dir = fixtures();
    let run = |seed: &str| {
        Command::new(env!("CARGO_BIN_EXE_rainbow"))
            .args(["gen", "--model", "forest", "--m", "30", "--t", "3"])
            .env("RAINBOW_SEED", seed)
            .current_dir(&dir)
            .output()
            .unwrap()
            .stdout
    };
    assert_eq!(run("5"), run("5"));
    assert_ne!(run("5"), run("6"));
}
