//! End-to-end tests driving the `dla` binary.

use std::path::PathBuf;
use std::process::{Command, Output};

fn dla(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_dla"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn write_instance(name: &str, body: &str) -> PathBuf {
    let path = std::env::temp_dir().join(format!("dla-test-{}-{name}", std::process::id()));
    std::fs::write(&path, body).unwrap();
    path
}

fn stdout_json(out: &Output) -> serde_json::Value {
    assert!(
        out.status.success(),
        "exit {:?}, stderr: {}",
        out.status.code(),
        String::from_utf8_lossy(&out.stderr)
    );
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

#[test]
fn classify_path_instance_verified() {
    let path = write_instance("path3", "n=3\nX.. .X. ..X\nZZ. .ZZ\n");
    let out = dla(&["classify", path.to_str().unwrap(), "--verify"]);
    let v = stdout_json(&out);
    assert_eq!(v["n"], 3);
    assert_eq!(v["total_dim"], 15);
    assert_eq!(v["canonical"], "su(4)");
    assert_eq!(v["decomposition"], "so(6)");
    assert_eq!(v["verified"], true);
    assert_eq!(v["components"].as_array().unwrap().len(), 1);
    assert_eq!(v["lifted"].as_array().unwrap().len(), 5);
    std::fs::remove_file(path).ok();
}

#[test]
fn classify_plain_output() {
    let path = write_instance("plain", "iX\niZ\n");
    let out = dla(&["classify", path.to_str().unwrap(), "--plain"]);
    assert!(out.status.success());
    let text = String::from_utf8_lossy(&out.stdout);
    assert!(text.contains("decomposition: so(3)"), "got: {text}");
    assert!(text.contains("canonical:     su(2)"), "got: {text}");
    assert!(text.contains("total dim:     3"), "got: {text}");
    std::fs::remove_file(path).ok();
}

#[test]
fn classify_is_deterministic() {
    let path = write_instance("det", "n=4\nXX.. iYZ.Z ..XY Z..Z iXXXX\n");
    let a = dla(&["classify", path.to_str().unwrap()]);
    let b = dla(&["classify", path.to_str().unwrap()]);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
    std::fs::remove_file(path).ok();
}

#[test]
fn exit_code_1_on_parse_error() {
    let path = write_instance("bad", "XQ\n");
    let out = dla(&["classify", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    let out = dla(&["classify", "/nonexistent/instance"]);
    assert_eq!(out.status.code(), Some(1));
    let empty = write_instance("empty", "# nothing\n");
    let out = dla(&["classify", empty.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    std::fs::remove_file(path).ok();
    std::fs::remove_file(empty).ok();
}

#[test]
fn exit_code_2_on_invalid_generator() {
    let path = write_instance("ident", "II\nXX\n");
    let out = dla(&["classify", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    std::fs::remove_file(path).ok();

    // Hermitian generators are rejected only under --strict
    let path = write_instance("herm", "XX\nZ.\n");
    let out = dla(&["classify", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let out = dla(&["classify", path.to_str().unwrap(), "--strict"]);
    assert_eq!(out.status.code(), Some(2));
    std::fs::remove_file(path).ok();
}

#[test]
fn generate_families_round_trip() {
    for (family, extra, dim) in [
        ("qaoa-path", None, 15u64),
        ("qaoa-cycle", None, 30),
        ("qaoa-graph", Some(["--edges", "1-2,2-3,1-3"]), 30),
    ] {
        let mut args = vec!["generate", family, "--n", "3"];
        if let Some(e) = extra {
            args.extend(e);
        }
        let out = dla(&args);
        assert!(out.status.success(), "{family} failed");
        let text = String::from_utf8_lossy(&out.stdout);
        assert!(text.starts_with("n=3\n"), "{family}: {text}");
        let path = write_instance(family, &text);
        let v = stdout_json(&dla(&["classify", path.to_str().unwrap(), "--verify"]));
        assert_eq!(v["total_dim"], dim, "{family}");
        assert_eq!(v["verified"], true, "{family}");
        std::fs::remove_file(path).ok();
    }
}

#[test]
fn generate_parity_basis() {
    let out = dla(&["generate", "parity-basis", "--n", "3", "--sets", "1,2;2,3"]);
    assert!(out.status.success());
    let text = String::from_utf8_lossy(&out.stdout);
    let lines: Vec<&str> = text.trim().lines().collect();
    assert_eq!(lines.len(), 1 + 6 + 2);
    assert!(lines.contains(&"iZZI"));
    assert!(lines.contains(&"iIZZ"));
    let path = write_instance("parity", &text);
    let v = stdout_json(&dla(&["classify", path.to_str().unwrap(), "--verify"]));
    assert_eq!(v["canonical"], "su(8)");
    assert_eq!(v["total_dim"], 63);
    assert_eq!(v["verified"], true);
    std::fs::remove_file(path).ok();

    let out = dla(&["generate", "parity-basis", "--n", "2", "--sets", "1,5"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn tools_closure_and_commutator_graph() {
    let path = write_instance("tools", "n=2\nX. .X ZZ\n");
    let v = stdout_json(&dla(&["tools", "closure", path.to_str().unwrap()]));
    assert_eq!(v["count"], 6);
    assert_eq!(v["points"].as_array().unwrap().len(), 6);

    let v = stdout_json(&dla(&["tools", "commutator-graph", path.to_str().unwrap()]));
    let sizes: Vec<u64> = v["components"]
        .as_array()
        .unwrap()
        .iter()
        .map(|c| c["size"].as_u64().unwrap())
        .collect();
    assert_eq!(sizes.iter().sum::<u64>(), 15); // all 4^2 - 1 points
    assert!(sizes.contains(&6)); // the generator component is the closure
    std::fs::remove_file(path).ok();
}

#[test]
fn tools_root_graph_and_witness() {
    let path = write_instance("root", "n=3\nX.. .X. ..X\nZZ. .ZZ\n");
    let v = stdout_json(&dla(&["tools", "root-graph", path.to_str().unwrap()]));
    let comps = v["components"].as_array().unwrap();
    assert_eq!(comps.len(), 1);
    assert_eq!(comps[0]["root"]["vertices"], 6); // P6 for the 5-vertex path

    let v = stdout_json(&dla(&["tools", "witness", path.to_str().unwrap()]));
    assert!(v["witness"].is_null());
    std::fs::remove_file(path).ok();
}

#[test]
fn tools_cartan() {
    let path = write_instance("cartan", "n=2\nX. .X ZZ\n");
    let v = stdout_json(&dla(&[
        "tools",
        "cartan",
        path.to_str().unwrap(),
        "--functional",
        "10000",
    ]));
    assert_eq!(v["verified"], true);
    let l = v["l_size"].as_u64().unwrap();
    let m = v["m_size"].as_u64().unwrap();
    assert_eq!(l + m, v["closure_size"].as_u64().unwrap());

    let out = dla(&[
        "tools",
        "cartan",
        path.to_str().unwrap(),
        "--functional",
        "101",
    ]);
    assert_eq!(out.status.code(), Some(1)); // wrong functional length
    std::fs::remove_file(path).ok();
}

#[test]
fn tools_catalog() {
    let v = stdout_json(&dla(&["tools", "catalog"]));
    assert_eq!(v["count"], 32);
    let graphs = v["graphs"].as_array().unwrap();
    assert_eq!(graphs.len(), 32);
    for g in graphs {
        assert_eq!(g["realization"].as_array().unwrap().len(), 6);
    }
}
