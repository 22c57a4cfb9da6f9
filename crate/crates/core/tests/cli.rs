use std::process::{Command, Output};

fn maxchord(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_maxchord"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn count() {
    let o = maxchord(&["count", "--genus", "4"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    for value in ["14118", "287", "509", "7258"] {
        assert!(text.contains(value), "{text}");
    }
    let o = maxchord(&["count", "--genus", "1"]);
    assert_eq!(stdout(&o), "g=1 d_star=1 d_type1=1 d_type2=1 d_all=1\n");
    assert_eq!(maxchord(&["count", "--genus", "0"]).status.code(), Some(1));
}

#[test]
fn count_json_uses_decimal_strings() {
    let o = maxchord(&["count", "--genus", "12", "--format", "json"]);
    let doc: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(doc["g"], 12);
    assert_eq!(doc["d_all"], "496903413656110608290219603");
    assert_eq!(doc["d_star"], "993806827312044893602464496");
    assert_eq!(doc["d_type1"], "120897239789655");
    assert_eq!(doc["d_type2"], "231748716159765");
}

#[test]
fn verify_table() {
    let o = maxchord(&["verify-table", "--max-genus", "12"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("48 of 48 values match"));
    let o = maxchord(&["verify-table", "--max-genus", "1"]);
    assert_eq!(o.status.code(), Some(0));
    let o = maxchord(&["verify-table", "--max-genus", "20"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("8 rows checked for integrality"));
    let o = maxchord(&["verify-table", "--max-genus", "3", "--format", "json"]);
    let doc: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(doc["compared"], 12);
    assert_eq!(doc["mismatches"].as_array().unwrap().len(), 0);
}

#[test]
fn oracle() {
    let o = maxchord(&["oracle", "--genus", "3", "--which", "dcircle"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(
        stdout(&o).contains("oracle 82 = formula 82"),
        "{}",
        stdout(&o)
    );
    let o = maxchord(&["oracle", "--genus", "6", "--which", "d2"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("oracle 166377 = formula 166377"));
    let o = maxchord(&["oracle", "--genus", "9"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stderr).contains("--force"));
    let o = maxchord(&["oracle", "--genus", "2", "--format", "json"]);
    let doc: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(doc["agree"], true);
    assert_eq!(doc["results"].as_array().unwrap().len(), 4);
}

#[test]
fn enumerate() {
    let o = maxchord(&["enumerate", "--chords", "2", "--maximal"]);
    assert_eq!(stdout(&o), "2 3 0 1\n");
    let o = maxchord(&["enumerate", "--chords", "3", "--genus", "0", "--count-only"]);
    assert_eq!(stdout(&o), "5\n");
    let o = maxchord(&[
        "enumerate",
        "--chords",
        "4",
        "--maximal",
        "--type2",
        "--count-only",
    ]);
    assert_eq!(stdout(&o), "5\n");
    let o = maxchord(&[
        "enumerate",
        "--chords",
        "4",
        "--maximal",
        "--type1",
        "--count-only",
    ]);
    assert_eq!(stdout(&o), "3\n");
    let o = maxchord(&["enumerate", "--chords", "3", "--limit", "2"]);
    assert_eq!(stdout(&o), "1 0 3 2 5 4\n1 0 4 5 2 3\n");
    let o = maxchord(&["enumerate", "--chords", "4", "--maximal", "--genus", "1"]);
    assert_eq!(o.status.code(), Some(1));
    let o = maxchord(&["enumerate", "--chords", "9", "--count-only"]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn bijection() {
    let o = maxchord(&["bijection", "--unfold", "1; 0-1:1"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(
        stdout(&o),
        "2 3 0 1\nV=1 F=1 non-orientable euler_genus=1\n"
    );
    let o = maxchord(&["bijection", "--fold", "2 3 0 1"]);
    assert_eq!(stdout(&o).lines().next(), Some("1; 0-1:1"));
    let o = maxchord(&["bijection", "--unfold", "1; 0-1:0"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stderr).contains("not a one-vertex map"));
    let o = maxchord(&["bijection", "--fold", "3 2 1 0"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stderr).contains("not maximal"));
}

#[test]
fn render() {
    let dir = std::env::temp_dir().join(format!("maxchord-render-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("crossing.svg");
    let p = path.to_str().unwrap();
    let o = maxchord(&["render", "2 3 0 1", "--output", p, "--axis", "type2"]);
    assert_eq!(o.status.code(), Some(0));
    let svg = std::fs::read_to_string(&path).unwrap();
    assert!(svg.starts_with("<svg"));
    assert_eq!(svg.matches(r#"class="point""#).count(), 4);
    assert_eq!(svg.matches(r#"class="chord""#).count(), 2);
    assert_eq!(svg.matches(r#"class="axis""#).count(), 1);

    assert_eq!(
        maxchord(&["render", "2 3 0 0", "--output", p])
            .status
            .code(),
        Some(1)
    );
    let unwritable = dir.join("missing").join("x.svg");
    let o = maxchord(&[
        "render",
        "2 3 0 1",
        "--output",
        unwritable.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(1));
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn output_is_deterministic() {
    for args in [
        &["enumerate", "--chords", "5", "--maximal"][..],
        &["oracle", "--genus", "3"][..],
        &["verify-table", "--max-genus", "15", "--format", "json"][..],
    ] {
        assert_eq!(maxchord(args).stdout, maxchord(args).stdout);
    }
}
