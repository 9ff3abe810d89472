use belief_decision_web::{
    evaluate_problem_json, example_json, example_names, explore_mass_json, sensitivity_sweep_json,
};
use serde_json::Value;

fn parse(text: &str) -> Value {
    serde_json::from_str(text).unwrap()
}

#[test]
fn every_listed_example_loads() {
    for name in example_names().split(',') {
        assert!(example_json(name).is_ok(), "{name}");
    }
    assert!(example_json("roulette").is_err());
}

#[test]
fn explore_wheel() {
    let doc = example_json("wheel2").unwrap();
    let out = parse(&explore_mass_json(&doc, 0.5).unwrap());
    assert_eq!(out["evi"]["lower"].as_f64().unwrap(), 5.5);
    assert!((out["value"].as_f64().unwrap() - 6.45).abs() < 1e-9);
    assert!((out["pignistic"].as_f64().unwrap() - 6.30).abs() < 1e-9);
    assert!(explore_mass_json(&doc, 1.2).is_err());
}

#[test]
fn evaluate_oil() {
    let doc = example_json("oil2").unwrap();
    let out = parse(&evaluate_problem_json(&doc, 0.5).unwrap());
    assert!((out["value"].as_f64().unwrap() - 27500.0).abs() < 1e-6);
    assert_eq!(out["strategy"]["root"], "test");
    assert!(evaluate_problem_json(&example_json("wheel1").unwrap(), 0.5).is_err());
}

#[test]
fn sweep_returns_regions_and_curve() {
    let doc = example_json("wheel_fee").unwrap();
    let out = parse(&sensitivity_sweep_json(&doc, 21).unwrap());
    assert_eq!(out["regions"].as_array().unwrap().len(), 2);
    let curve = out["curve"].as_array().unwrap();
    assert_eq!(curve.len(), 21);
    assert_eq!(curve[0][1].as_f64().unwrap(), 6.0);
    assert!((curve[20][1].as_f64().unwrap() - 7.4).abs() < 1e-9);
    assert!(sensitivity_sweep_json(&doc, 1).is_err());
}
