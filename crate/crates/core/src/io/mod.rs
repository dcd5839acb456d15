//! Reading pages from PageXML and plain-text files, and pairing ground-truth
//! with hypothesis files into a test set.

mod pagexml;
mod pairing;
mod text;

use std::path::{Path, PathBuf};

use serde::Serialize;

pub use pagexml::parse_page_xml;
pub use pairing::{pair_test_set, PairOptions, PairedTestSet};
pub use text::{parse_plain_text, to_plain_text};

use crate::error::{Error, Result};
use crate::types::Page;

/// A parsed page together with what was noticed while reading it.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct PageDocument {
    pub source_path: String,
    pub page: Page,
    pub warnings: Vec<String>,
}

pub(crate) fn stem(path: &Path) -> String {
    path.file_stem()
        .map(|s| s.to_string_lossy().into_owned())
        .unwrap_or_default()
}

fn is_xml(path: &Path) -> bool {
    path.extension()
        .is_some_and(|e| e.eq_ignore_ascii_case("xml"))
}

/// Reads a page file: `.xml` as PageXML, anything else as plain text.
pub fn load_page(path: impl AsRef<Path>) -> Result<PageDocument> {
    let path = path.as_ref();
    let bytes = std::fs::read(path).map_err(|e| Error::io(path, e))?;
    let source = path.to_string_lossy();
    let mut doc = if is_xml(path) {
        parse_page_xml(&bytes, &source)?
    } else {
        parse_plain_text(&bytes, &source)?
    };
    doc.page.id = stem(path);
    Ok(doc)
}

pub(crate) fn page_files(dir: &Path) -> Result<Vec<PathBuf>> {
    let mut files = Vec::new();
    for entry in std::fs::read_dir(dir).map_err(|e| Error::io(dir, e))? {
        let entry = entry.map_err(|e| Error::io(dir, e))?;
        let path = entry.path();
        if path.is_file() {
            files.push(path);
        }
    }
    files.sort();
    Ok(files)
}
