//! Stateless HTTP parsing service backing the explorer.

use std::collections::BTreeMap;
use std::sync::Arc;

use axum::body::Bytes;
use axum::extract::{DefaultBodyLimit, State};
use axum::http::StatusCode;
use axum::response::{IntoResponse, Response};
use axum::routing::{get, post};
use axum::{Json, Router};
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};
use tower_http::cors::CorsLayer;
use uast_core::{CrossLanguageEntry, GrammarBundle, LanguageId, RecordBuilder, RuleTable, UniversalFileRecord, UniversalType};

pub const DEFAULT_MAX_SOURCE_BYTES: usize = 1024 * 1024;

pub struct AppState {
    pub grammars: GrammarBundle,
    pub rules: RuleTable,
    pub max_source_bytes: usize,
}

pub fn router(state: AppState) -> Router {
    // JSON escaping can inflate a source up to six times.
    let body_limit = state.max_source_bytes.saturating_mul(6).saturating_add(64 * 1024);
    Router::new()
        .route("/languages", get(languages))
        .route("/parse", post(parse))
        .route("/compare", post(compare))
        .layer(DefaultBodyLimit::max(body_limit))
        .layer(CorsLayer::permissive())
        .with_state(Arc::new(state))
}

#[derive(Debug)]
pub enum ApiError {
    Malformed(Vec<String>),
    Unsupported(String),
    TooLarge { bytes: usize, limit: usize },
    Internal(String),
}

impl IntoResponse for ApiError {
    fn into_response(self) -> Response {
        let (status, body) = match self {
            ApiError::Malformed(violations) => (
                StatusCode::BAD_REQUEST,
                json!({"error": "malformed request", "violations": violations}),
            ),
            ApiError::Unsupported(language) => (
                StatusCode::UNPROCESSABLE_ENTITY,
                json!({"error": "unsupported language", "language": language}),
            ),
            ApiError::TooLarge { bytes, limit } => (
                StatusCode::PAYLOAD_TOO_LARGE,
                json!({"error": "source too large", "bytes": bytes, "limit": limit}),
            ),
            ApiError::Internal(message) => (
                StatusCode::INTERNAL_SERVER_ERROR,
                json!({"error": "internal", "message": message}),
            ),
        };
        (status, Json(body)).into_response()
    }
}

async fn languages() -> Json<Vec<&'static str>> {
    Json(LanguageId::ALL.iter().map(|l| l.name()).collect())
}

struct SourceRequest {
    language: LanguageId,
    source: String,
}

fn body_json(bytes: &[u8]) -> Result<Value, ApiError> {
    let value: Value = serde_json::from_slice(bytes)
        .map_err(|e| ApiError::Malformed(vec![format!("body is not valid JSON: {e}")]))?;
    if !value.is_object() {
        return Err(ApiError::Malformed(vec!["body must be a JSON object".into()]));
    }
    Ok(value)
}

/// Collects shape violations for `{language, source}` at `prefix`.
fn source_request(value: &Value, prefix: &str, violations: &mut Vec<String>) -> Option<(String, String)> {
    let Some(obj) = value.as_object() else {
        violations.push(format!("`{prefix}` must be an object"));
        return None;
    };
    let field = |name: &str, violations: &mut Vec<String>| match obj.get(name) {
        Some(Value::String(s)) => Some(s.clone()),
        Some(_) => {
            violations.push(format!("`{prefix}{name}` must be a string"));
            None
        }
        None => {
            violations.push(format!("missing field `{prefix}{name}`"));
            None
        }
    };
    let language = field("language", violations);
    let source = field("source", violations);
    Some((language?, source?))
}

fn resolve(state: &AppState, (language, source): (String, String)) -> Result<SourceRequest, ApiError> {
    let language: LanguageId = language.parse().map_err(|_| ApiError::Unsupported(language))?;
    if source.len() > state.max_source_bytes {
        return Err(ApiError::TooLarge {
            bytes: source.len(),
            limit: state.max_source_bytes,
        });
    }
    Ok(SourceRequest { language, source })
}

fn build(state: &AppState, req: SourceRequest, path: &str) -> Result<UniversalFileRecord, ApiError> {
    RecordBuilder::new(&state.grammars, &state.rules)
        .build(req.language, path, req.source)
        .map_err(|e| ApiError::Internal(e.to_string()))
}

async fn parse(State(state): State<Arc<AppState>>, body: Bytes) -> Result<Json<UniversalFileRecord>, ApiError> {
    let value = body_json(&body)?;
    let mut violations = Vec::new();
    let fields = source_request(&value, "", &mut violations);
    let fields = match fields {
        Some(f) if violations.is_empty() => f,
        _ => return Err(ApiError::Malformed(violations)),
    };
    let req = resolve(&state, fields)?;
    let record = tokio::task::spawn_blocking(move || build(&state, req, "input"))
        .await
        .map_err(|e| ApiError::Internal(e.to_string()))??;
    Ok(Json(record))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MatchedPair {
    pub universal_type: UniversalType,
    pub name: String,
    pub a: usize,
    pub b: usize,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Pairing {
    pub matched: Vec<MatchedPair>,
    pub unmatched_a: Vec<CrossLanguageEntry>,
    pub unmatched_b: Vec<CrossLanguageEntry>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CompareResponse {
    pub a: UniversalFileRecord,
    pub b: UniversalFileRecord,
    pub pairing: Pairing,
}

/// Pairs entries with equal (universal_type, name), in node order; the k-th
/// occurrence on one side pairs with the k-th on the other. Unnamed entries
/// never match.
pub fn pair_entries(a: &UniversalFileRecord, b: &UniversalFileRecord) -> Pairing {
    type Key = (UniversalType, String);
    let mut pending: BTreeMap<Key, Vec<&CrossLanguageEntry>> = BTreeMap::new();
    for e in b.cross_language_map.entries() {
        if let Some(name) = &e.name {
            pending.entry((e.universal_type, name.clone())).or_default().push(e);
        }
    }
    for list in pending.values_mut() {
        list.reverse();
    }

    let mut pairing = Pairing::default();
    let mut used_b = std::collections::BTreeSet::new();
    for e in a.cross_language_map.entries() {
        let partner = e
            .name
            .as_ref()
            .and_then(|name| pending.get_mut(&(e.universal_type, name.clone())))
            .and_then(Vec::pop);
        match partner {
            Some(p) => {
                used_b.insert(p.node_id);
                pairing.matched.push(MatchedPair {
                    universal_type: e.universal_type,
                    name: e.name.clone().unwrap_or_default(),
                    a: e.node_id,
                    b: p.node_id,
                });
            }
            None => pairing.unmatched_a.push(e.clone()),
        }
    }
    pairing.unmatched_b = b
        .cross_language_map
        .entries()
        .filter(|e| !used_b.contains(&e.node_id))
        .cloned()
        .collect();
    pairing
}

async fn compare(State(state): State<Arc<AppState>>, body: Bytes) -> Result<Json<CompareResponse>, ApiError> {
    let value = body_json(&body)?;
    let mut violations = Vec::new();
    let a = match value.get("a") {
        Some(v) => source_request(v, "a.", &mut violations),
        None => {
            violations.push("missing field `a`".into());
            None
        }
    };
    let b = match value.get("b") {
        Some(v) => source_request(v, "b.", &mut violations),
        None => {
            violations.push("missing field `b`".into());
            None
        }
    };
    let (a, b) = match (a, b) {
        (Some(a), Some(b)) if violations.is_empty() => (a, b),
        _ => return Err(ApiError::Malformed(violations)),
    };
    let (a, b) = (resolve(&state, a)?, resolve(&state, b)?);
    let response = tokio::task::spawn_blocking(move || -> Result<CompareResponse, ApiError> {
        let a = build(&state, a, "a")?;
        let b = build(&state, b, "b")?;
        let pairing = pair_entries(&a, &b);
        Ok(CompareResponse { a, b, pairing })
    })
    .await
    .map_err(|e| ApiError::Internal(e.to_string()))??;
    Ok(Json(response))
}

pub async fn serve(bind: &str, state: AppState) -> std::io::Result<()> {
    let listener = tokio::net::TcpListener::bind(bind).await?;
    eprintln!("listening on {}", listener.local_addr()?);
    axum::serve(listener, router(state))
        .with_graceful_shutdown(async {
            let _ = tokio::signal::ctrl_c().await;
        })
        .await
}
