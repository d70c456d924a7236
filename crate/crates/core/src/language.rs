use std::fmt;
use std::path::Path;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// One of the ten supported source languages.
///
/// Declaration order is the canonical ordering used for reports, shard
/// listings and analytics matrices.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum LanguageId {
    #[serde(rename = "C")]
    C,
    #[serde(rename = "C++")]
    Cpp,
    #[serde(rename = "C#")]
    CSharp,
    #[serde(rename = "Go")]
    Go,
    #[serde(rename = "Java")]
    Java,
    #[serde(rename = "JavaScript")]
    JavaScript,
    #[serde(rename = "Python")]
    Python,
    #[serde(rename = "Ruby")]
    Ruby,
    #[serde(rename = "Scala")]
    Scala,
    #[serde(rename = "TypeScript")]
    TypeScript,
}

impl LanguageId {
    pub const ALL: [LanguageId; 10] = [
        LanguageId::C,
        LanguageId::Cpp,
        LanguageId::CSharp,
        LanguageId::Go,
        LanguageId::Java,
        LanguageId::JavaScript,
        LanguageId::Python,
        LanguageId::Ruby,
        LanguageId::Scala,
        LanguageId::TypeScript,
    ];

    /// Display name, as serialized in records.
    pub fn name(self) -> &'static str {
        match self {
            LanguageId::C => "C",
            LanguageId::Cpp => "C++",
            LanguageId::CSharp => "C#",
            LanguageId::Go => "Go",
            LanguageId::Java => "Java",
            LanguageId::JavaScript => "JavaScript",
            LanguageId::Python => "Python",
            LanguageId::Ruby => "Ruby",
            LanguageId::Scala => "Scala",
            LanguageId::TypeScript => "TypeScript",
        }
    }

    /// Filesystem-safe identifier, used for shard file names and rule tables.
    pub fn slug(self) -> &'static str {
        match self {
            LanguageId::C => "c",
            LanguageId::Cpp => "cpp",
            LanguageId::CSharp => "csharp",
            LanguageId::Go => "go",
            LanguageId::Java => "java",
            LanguageId::JavaScript => "javascript",
            LanguageId::Python => "python",
            LanguageId::Ruby => "ruby",
            LanguageId::Scala => "scala",
            LanguageId::TypeScript => "typescript",
        }
    }

    /// Extension table. `.h` resolves to C++ unless a manifest declares C.
    pub fn from_extension(ext: &str) -> Option<LanguageId> {
        let lang = match ext.to_ascii_lowercase().as_str() {
            "c" => LanguageId::C,
            "cc" | "cpp" | "cxx" | "hpp" | "h" => LanguageId::Cpp,
            "cs" => LanguageId::CSharp,
            "go" => LanguageId::Go,
            "java" => LanguageId::Java,
            "js" | "mjs" => LanguageId::JavaScript,
            "py" => LanguageId::Python,
            "rb" => LanguageId::Ruby,
            "scala" => LanguageId::Scala,
            "ts" | "tsx" => LanguageId::TypeScript,
            _ => return None,
        };
        Some(lang)
    }

    pub fn from_path(path: &Path) -> Option<LanguageId> {
        path.extension()
            .and_then(|e| e.to_str())
            .and_then(LanguageId::from_extension)
    }
}

impl fmt::Display for LanguageId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for LanguageId {
    type Err = Error;

    /// Accepts display names and slugs, case-insensitively, plus a few
    /// common aliases (`cpp`, `cs`, `js`, `ts`, `py`, `rb`).
    fn from_str(s: &str) -> Result<Self> {
        let key = s.trim().to_ascii_lowercase();
        let lang = match key.as_str() {
            "c" => LanguageId::C,
            "c++" | "cpp" | "cxx" => LanguageId::Cpp,
            "c#" | "csharp" | "cs" => LanguageId::CSharp,
            "go" | "golang" => LanguageId::Go,
            "java" => LanguageId::Java,
            "javascript" | "js" => LanguageId::JavaScript,
            "python" | "py" => LanguageId::Python,
            "ruby" | "rb" => LanguageId::Ruby,
            "scala" => LanguageId::Scala,
            "typescript" | "ts" => LanguageId::TypeScript,
            _ => return Err(Error::UnsupportedLanguage(s.to_string())),
        };
        Ok(lang)
    }
}

/// Grammar dispatch: an explicit declaration wins, otherwise the extension
/// table decides.
pub fn detect_language(path: &Path, declared: Option<LanguageId>) -> Result<LanguageId> {
    if let Some(lang) = declared {
        return Ok(lang);
    }
    LanguageId::from_path(path)
        .ok_or_else(|| Error::UnsupportedLanguage(path.display().to_string()))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exactly_ten_languages() {
        assert_eq!(LanguageId::ALL.len(), 10);
        let mut names: Vec<_> = LanguageId::ALL.iter().map(|l| l.name()).collect();
        names.dedup();
        assert_eq!(names.len(), 10);
    }

    #[test]
    fn detect_by_extension() {
        assert_eq!(
            detect_language(Path::new("src/main.go"), None).unwrap(),
            LanguageId::Go
        );
        assert_eq!(
            detect_language(Path::new("x/lib.h"), None).unwrap(),
            LanguageId::Cpp
        );
    }

    #[test]
    fn declaration_takes_precedence() {
        assert_eq!(
            detect_language(Path::new("lib.h"), Some(LanguageId::C)).unwrap(),
            LanguageId::C
        );
    }

    #[test]
    fn unknown_extension_is_an_error() {
        let err = detect_language(Path::new("README"), None).unwrap_err();
        assert!(matches!(err, Error::UnsupportedLanguage(_)));
        assert!(detect_language(Path::new("notes.txt"), None).is_err());
    }

    #[test]
    fn names_round_trip() {
        for lang in LanguageId::ALL {
            assert_eq!(lang.name().parse::<LanguageId>().unwrap(), lang);
            assert_eq!(lang.slug().parse::<LanguageId>().unwrap(), lang);
            let json = serde_json::to_string(&lang).unwrap();
            assert_eq!(json, format!("\"{}\"", lang.name()));
        }
    }
}
