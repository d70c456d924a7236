use std::fs;
use std::path::PathBuf;

use axum::body::Body;
use axum::http::{Request, StatusCode};
use axum::Router;
use http_body_util::BodyExt;
use serde_json::{json, Value};
use tower::ServiceExt;
use uast_cli::service::{router, AppState, CompareResponse, DEFAULT_MAX_SOURCE_BYTES};
use uast_core::{GrammarBundle, RuleTable, UniversalFileRecord, UniversalType};

fn app(max_source_bytes: usize) -> Router {
    router(AppState {
        grammars: GrammarBundle::builtin().unwrap(),
        rules: RuleTable::builtin(),
        max_source_bytes,
    })
}

async fn call(app: &Router, method: &str, uri: &str, body: Option<String>) -> (StatusCode, Value) {
    let mut req = Request::builder().method(method).uri(uri);
    if body.is_some() {
        req = req.header("content-type", "application/json");
    }
    let req = req.body(body.map(Body::from).unwrap_or_else(Body::empty)).unwrap();
    let resp = app.clone().oneshot(req).await.unwrap();
    let status = resp.status();
    let bytes = resp.into_body().collect().await.unwrap().to_bytes();
    let value = serde_json::from_slice(&bytes).unwrap_or(Value::Null);
    (status, value)
}

fn fixture(rel: &str) -> String {
    let p = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../corpus/fixtures").join(rel);
    fs::read_to_string(p).unwrap()
}

#[tokio::test]
async fn languages_lists_ten_names() {
    let (status, body) = call(&app(DEFAULT_MAX_SOURCE_BYTES), "GET", "/languages", None).await;
    assert_eq!(status, StatusCode::OK);
    let names: Vec<&str> = body.as_array().unwrap().iter().map(|v| v.as_str().unwrap()).collect();
    assert_eq!(
        names,
        ["C", "C++", "C#", "Go", "Java", "JavaScript", "Python", "Ruby", "Scala", "TypeScript"]
    );
}

#[tokio::test]
async fn parse_returns_all_four_layers() {
    let body = json!({"language": "Python", "source": "x = 1"}).to_string();
    let (status, value) = call(&app(DEFAULT_MAX_SOURCE_BYTES), "POST", "/parse", Some(body)).await;
    assert_eq!(status, StatusCode::OK);
    for key in ["language", "path", "metadata", "nodes", "node_categories", "cross_language_map"] {
        assert!(value.get(key).is_some(), "{key}");
    }
    let record: UniversalFileRecord = serde_json::from_value(value).unwrap();
    assert_eq!(record.metadata.errors, 0);
    assert_eq!(record.source(), Some("x = 1"));
    uast_core::validate_record(&record).unwrap();
}

#[tokio::test]
async fn malformed_bodies_are_400_with_violations() {
    let app = app(DEFAULT_MAX_SOURCE_BYTES);
    for body in ["not json", "[1, 2]", r#"{"language": 3}"#, r#"{"source": "x"}"#] {
        let (status, value) = call(&app, "POST", "/parse", Some(body.to_string())).await;
        assert_eq!(status, StatusCode::BAD_REQUEST, "{body}");
        assert!(!value["violations"].as_array().unwrap().is_empty(), "{body}");
    }
    let (status, value) = call(&app, "POST", "/compare", Some(r#"{"a": {"language": "Go"}}"#.into())).await;
    assert_eq!(status, StatusCode::BAD_REQUEST);
    assert_eq!(value["violations"].as_array().unwrap().len(), 2);
}

#[tokio::test]
async fn unsupported_language_is_422() {
    let body = json!({"language": "COBOL", "source": "x"}).to_string();
    let (status, _) = call(&app(DEFAULT_MAX_SOURCE_BYTES), "POST", "/parse", Some(body)).await;
    assert_eq!(status, StatusCode::UNPROCESSABLE_ENTITY);
}

#[tokio::test]
async fn oversize_source_is_413() {
    let app = app(64);
    let body = json!({"language": "Python", "source": "x = 1\n".repeat(20)}).to_string();
    let (status, value) = call(&app, "POST", "/parse", Some(body)).await;
    assert_eq!(status, StatusCode::PAYLOAD_TOO_LARGE);
    assert_eq!(value["limit"], 64);
    let body = json!({"language": "Python", "source": "x = 1\n"}).to_string();
    assert_eq!(call(&app, "POST", "/parse", Some(body)).await.0, StatusCode::OK);
}

#[tokio::test]
async fn broken_code_never_fails_the_request() {
    let app = app(DEFAULT_MAX_SOURCE_BYTES);
    let cases = [
        ("Python", "def f(:\n    return ))\n"),
        ("Java", "class { void ( }"),
        ("C++", "template <"),
        ("Ruby", "def\nend end"),
        ("TypeScript", "let x: = ;"),
        ("Go", "\u{0}\u{1}"),
        ("Scala", ""),
    ];
    for (language, source) in cases {
        let body = json!({"language": language, "source": source}).to_string();
        let (status, value) = call(&app, "POST", "/parse", Some(body)).await;
        assert_eq!(status, StatusCode::OK, "{language}");
        let record: UniversalFileRecord = serde_json::from_value(value).unwrap();
        assert_eq!(record.source(), Some(source));
    }
}

async fn compare(app: &Router, a: (&str, &str), b: (&str, &str)) -> CompareResponse {
    let body = json!({
        "a": {"language": a.0, "source": a.1},
        "b": {"language": b.0, "source": b.1},
    })
    .to_string();
    let (status, value) = call(app, "POST", "/compare", Some(body)).await;
    assert_eq!(status, StatusCode::OK, "{value}");
    serde_json::from_value(value).unwrap()
}

#[tokio::test]
async fn age_check_pair_matches_one_function() {
    let app = app(DEFAULT_MAX_SOURCE_BYTES);
    let py = fixture("age_check/age_check.py");
    let java = fixture("age_check/AgeCheck.java");
    let resp = compare(&app, ("Python", &py), ("Java", &java)).await;
    let functions: Vec<_> = resp
        .pairing
        .matched
        .iter()
        .filter(|m| m.universal_type == UniversalType::Function)
        .collect();
    assert_eq!(functions.len(), 1);
    assert_eq!(functions[0].name, "is_adult");
    assert_eq!(resp.a.nodes[functions[0].a].kind, "function_definition");
    assert_eq!(resp.b.nodes[functions[0].b].kind, "method_declaration");
}

#[tokio::test]
async fn self_comparison_matches_everything() {
    let app = app(DEFAULT_MAX_SOURCE_BYTES);
    let src = fixture("names/calculate_sum.py");
    let resp = compare(&app, ("Python", &src), ("Python", &src)).await;
    assert_eq!(resp.pairing.matched.len(), resp.a.cross_language_map.entries().count());
    assert!(resp.pairing.unmatched_a.is_empty() && resp.pairing.unmatched_b.is_empty());
    assert!(resp.pairing.matched.iter().all(|m| m.a == m.b));
}

#[tokio::test]
async fn different_names_do_not_match() {
    let app = app(DEFAULT_MAX_SOURCE_BYTES);
    let resp = compare(
        &app,
        ("Python", "def f():\n    return 1\n"),
        ("Java", "class A { static int g() { return 1; } }\n"),
    )
    .await;
    let functions = resp.pairing.matched.iter().filter(|m| m.universal_type == UniversalType::Function).count();
    assert_eq!(functions, 0);
    assert_eq!(resp.pairing.unmatched_a.len(), 1);
    assert!(resp.pairing.unmatched_b.iter().any(|e| e.name.as_deref() == Some("g")));
}

#[tokio::test]
async fn responses_do_not_depend_on_request_order() {
    let requests: Vec<(&str, String)> = vec![
        ("/parse", json!({"language": "Go", "source": "package p\nfunc f() {}\n"}).to_string()),
        ("/parse", json!({"language": "Ruby", "source": "class K\nend\n"}).to_string()),
        ("/parse", json!({"language": "COBOL", "source": ""}).to_string()),
        ("/compare", json!({"a": {"language": "C", "source": "int f(void);"}, "b": {"language": "C++", "source": "int f();"}}).to_string()),
        ("/parse", "{".to_string()),
    ];
    let app = app(DEFAULT_MAX_SOURCE_BYTES);
    let mut forward = Vec::new();
    for (uri, body) in &requests {
        forward.push(call(&app, "POST", uri, Some(body.clone())).await);
    }
    let mut backward = Vec::new();
    for (uri, body) in requests.iter().rev() {
        backward.push(call(&app, "POST", uri, Some(body.clone())).await);
    }
    backward.reverse();
    assert_eq!(forward, backward);

    let concurrent = send_concurrently(&app, &requests).await;
    assert_eq!(forward, concurrent);
}

async fn send_concurrently(app: &Router, requests: &[(&str, String)]) -> Vec<(StatusCode, Value)> {
    let handles: Vec<_> = requests
        .iter()
        .map(|(uri, body)| {
            let app = app.clone();
            let (uri, body) = (uri.to_string(), body.clone());
            tokio::spawn(async move { call(&app, "POST", &uri, Some(body)).await })
        })
        .collect();
    let mut out = Vec::new();
    for h in handles {
        out.push(h.await.unwrap());
    }
    out
}

#[tokio::test]
async fn cors_preflight_is_allowed() {
    let req = Request::builder()
        .method("OPTIONS")
        .uri("/parse")
        .header("origin", "http://localhost:5173")
        .header("access-control-request-method", "POST")
        .body(Body::empty())
        .unwrap();
    let resp = app(DEFAULT_MAX_SOURCE_BYTES).oneshot(req).await.unwrap();
    assert!(resp.headers().contains_key("access-control-allow-origin"));
}
