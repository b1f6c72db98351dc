use thetalie::job::*;

fn job(text: &str) -> JobSpec {
    parse_job(text).unwrap()
}

fn data<'a>(r: &'a Report, section: &str) -> &'a serde_json::Value {
    let s = r.section(section).unwrap_or_else(|| panic!("missing section {section}"));
    assert_eq!(s.status, Status::Ok, "{section}");
    &s.data
}

#[test]
fn sl2_all_analyses() {
    let r = run(&job("type = A1\nkac = 1,1\n"), RunOptions::default());
    assert!(r.success(), "{}", r.render_text(false));
    assert_eq!(data(&r, "grade")["dims"], serde_json::json!([1, 2]));
    assert_eq!(data(&r, "cartan")["rank"], 1);
    assert_eq!(data(&r, "weyl")["order"], 2);
    assert_eq!(data(&r, "strata")["count"], 2);
    assert_eq!(data(&r, "central")["result"], "pass");
    let counts: Vec<u64> = data(&r, "real-orbits")["strata"].as_array().unwrap().iter().map(|s| s["count"].as_u64().unwrap()).collect();
    assert_eq!(counts, vec![1, 1]);
}

#[test]
fn sl3_all_analyses() {
    let r = run(&job("type = A2\nkac = 1,1,1\nanalyses = all\n"), RunOptions::default());
    assert!(r.success(), "{}", r.render_text(false));
    assert_eq!(data(&r, "grade")["dims"], serde_json::json!([2, 3, 3]));
    assert_eq!(data(&r, "cartan")["rank"], 1);
    assert_eq!(data(&r, "weyl")["order"], 3);
    assert_eq!(data(&r, "strata")["count"], 2);
    assert_eq!(data(&r, "central")["result"], "pass");
    assert_eq!(data(&r, "h1")["classes"], 1);
    let counts: Vec<u64> = data(&r, "real-orbits")["strata"].as_array().unwrap().iter().map(|s| s["count"].as_u64().unwrap()).collect();
    assert_eq!(counts, vec![1, 1]);
}

#[test]
fn dependencies_are_added() {
    let j = job("type = A1\nkac = 1,1\nanalyses = strata\n");
    let names: Vec<&str> = j.analyses.iter().map(|a| a.name()).collect();
    assert_eq!(names, vec!["grade", "cartan", "weights", "weyl", "strata"]);
    let r = run(&j, RunOptions::default());
    let sections: Vec<&str> = r.sections.iter().map(|s| s.name.as_str()).collect();
    assert_eq!(sections, vec!["algebra", "grade", "cartan", "weights", "weyl", "strata"]);
}

#[test]
fn reports_are_deterministic_across_modes() {
    for text in ["type = A1\nkac = 1,1\n", "type = A2\nkac = 1,1,1\nseed = 5\n", "type = B2\nkac = 1,1,0\n"] {
        let j = job(text);
        let a = run(&j, RunOptions { parallel: true });
        let b = run(&j, RunOptions { parallel: false });
        let c = run(&j, RunOptions { parallel: true });
        for format in [Format::Text, Format::Machine] {
            assert_eq!(a.render(format, false), b.render(format, false));
            assert_eq!(a.render(format, false), c.render(format, false));
        }
    }
}

#[test]
fn failures_skip_dependents_only() {
    // sl2 with m = 4: the Cartan subspace is zero, the hypotheses fail and the central check refuses
    let r = run(&job("type = A1\nkac = 3,1\n"), RunOptions::default());
    assert!(!r.success());
    assert_eq!(data(&r, "weyl")["order"], 1);
    assert!(matches!(r.section("central").unwrap().status, Status::Failed(_)));
    assert_eq!(r.section("families").unwrap().status, Status::Ok);
    assert_eq!(r.section("h1").unwrap().status, Status::Ok);
}

#[test]
fn cap_violations_are_per_section() {
    let r = run(&job("type = A3\nkac = 1,0,0,0\ncap_group_order = 10\nanalyses = weyl\n"), RunOptions::default());
    assert!(!r.success());
    assert!(matches!(&r.section("weyl").unwrap().status, Status::Failed(m) if m.contains("cap")));
    assert_eq!(r.section("cartan").unwrap().status, Status::Ok);
}

#[test]
fn machine_format_has_schema() {
    let r = run(&job("type = A1\nkac = 1,1\nanalyses = grade\n"), RunOptions::default());
    let v: serde_json::Value = serde_json::from_str(&r.render_machine(true)).unwrap();
    assert_eq!(v["schema"], SCHEMA);
    assert!(v.get("timing_ms").is_some());
    let v: serde_json::Value = serde_json::from_str(&r.render_machine(false)).unwrap();
    assert!(v.get("timing_ms").is_none());
}

#[test]
fn parse_errors_have_positions() {
    let cases = [
        ("type = X9\nkac = 1,1\n", 1, 8),
        ("type = A1\nkac = 1,1\nanalyses = grade, wibble\n", 3, 12),
        ("type = A1\n  kac 1,1\n", 2, 3),
        ("type = A1\nkac = 1,1\ncolour = red\n", 3, 1),
        ("type = A1\nkac = 1,1\nm = 3\n", 3, 5),
        ("type = A1\nkac = 1,1,1\n", 2, 7),
        ("type = A1\nkac = 1,1\ntype = A2\n", 3, 1),
        ("type = A1\n", 1, 1),
        ("type = A1\nkac = 1,1\nseed = -1\n", 3, 8),
    ];
    for (text, line, col) in cases {
        let e = parse_job(text).unwrap_err();
        assert_eq!((e.line, e.col), (line, col), "{text:?}: {e}");
    }
}

#[test]
fn comments_and_options() {
    let j = job("# sl3\ntype = a2   # lower case works\nkac = 1,1,1\nm = 3\nseed = 9\nformat = machine\nreal_form = split\ncap_h1 = 50\n");
    assert_eq!(j.seed, 9);
    assert_eq!(j.format, Format::Machine);
    assert_eq!(j.caps.h1, 50);
    assert_eq!(j.analyses.len(), Analysis::ALL.len());
}
