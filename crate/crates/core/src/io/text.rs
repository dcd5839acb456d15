use crate::error::{Error, Result};
use crate::io::PageDocument;
use crate::types::{Line, Page};

/// One line per input line; LF and CRLF endings, trailing newline optional.
pub fn parse_plain_text(bytes: &[u8], source: &str) -> Result<PageDocument> {
    let text = std::str::from_utf8(bytes).map_err(|e| Error::Parse {
        source_name: source.to_string(),
        message: format!("invalid UTF-8 at byte {}", e.valid_up_to()),
    })?;
    let mut warnings = Vec::new();
    let mut lines = Vec::new();
    for (k, raw) in text.lines().enumerate() {
        let raw = raw.trim_end_matches('\r');
        let (line, stripped) = Line::normalized(raw)?;
        if stripped {
            warnings.push(format!(
                "{source}: line {}: stripped leading/trailing spaces",
                k + 1
            ));
        }
        lines.push(line);
    }
    Ok(PageDocument {
        source_path: source.to_string(),
        page: Page::new(crate::io::stem(std::path::Path::new(source)), lines),
        warnings,
    })
}

/// Inverse of [`parse_plain_text`] for pages without baselines.
pub fn to_plain_text(page: &Page) -> String {
    let mut out = String::new();
    for line in &page.lines {
        out.push_str(line.text());
        out.push('\n');
    }
    out
}
