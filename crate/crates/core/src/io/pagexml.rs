//! The PageXML subset needed for evaluation: text lines, their text, their
//! baselines and the region reading order. Namespaces are ignored.

use std::collections::HashMap;

use roxmltree::{Document, Node};

use crate::error::{Error, Result};
use crate::geometry::{Baseline, Point};
use crate::io::PageDocument;
use crate::types::{Line, Page};

fn named<'a, 'i>(node: Node<'a, 'i>, name: &str) -> impl Iterator<Item = Node<'a, 'i>> + 'a {
    let name = name.to_string();
    node.children()
        .filter(move |c| c.is_element() && c.tag_name().name() == name)
}

fn is(node: &Node<'_, '_>, name: &str) -> bool {
    node.is_element() && node.tag_name().name() == name
}

fn parse_points(raw: &str) -> Option<Baseline> {
    let mut points = Vec::new();
    for pair in raw.split_whitespace() {
        let (x, y) = pair.split_once(',')?;
        let coord = |s: &str| -> Option<i64> {
            let v: f64 = s.trim().parse().ok()?;
            v.is_finite().then(|| v.round() as i64)
        };
        points.push(Point::new(coord(x)?, coord(y)?));
    }
    Baseline::new(points).ok()
}

/// Text of the first `TextEquiv` directly below `line` (lowest `index` wins
/// when several are given).
fn line_text(line: Node<'_, '_>) -> String {
    let equivs: Vec<Node> = named(line, "TextEquiv").collect();
    let chosen = equivs.iter().min_by_key(|e| {
        e.attribute("index")
            .and_then(|i| i.parse::<i64>().ok())
            .unwrap_or(i64::MAX)
    });
    chosen
        .and_then(|e| named(*e, "Unicode").next())
        .map(|u| u.text().unwrap_or_default().to_string())
        .unwrap_or_default()
}

/// `readingOrder {index:N;}` from a `custom` attribute.
fn custom_index(node: Node<'_, '_>) -> Option<i64> {
    let custom = node.attribute("custom")?;
    let rest = &custom[custom.find("readingOrder")?..];
    let rest = &rest[rest.find("index:")? + "index:".len()..];
    let end = rest.find(|c: char| !(c.is_ascii_digit() || c == '-'))?;
    rest[..end].parse().ok()
}

/// Region ids in reading order, walking nested groups.
fn region_order(group: Node<'_, '_>, out: &mut Vec<String>) {
    let mut children: Vec<(i64, usize, Node)> = group
        .children()
        .filter(Node::is_element)
        .enumerate()
        .map(|(k, c)| {
            let idx = c
                .attribute("index")
                .and_then(|i| i.parse().ok())
                .unwrap_or(i64::MAX);
            (idx, k, c)
        })
        .collect();
    if is(&group, "OrderedGroup") || is(&group, "OrderedGroupIndexed") {
        children.sort_by_key(|&(idx, k, _)| (idx, k));
    }
    for (_, _, child) in children {
        if let Some(r) = child.attribute("regionRef") {
            out.push(r.to_string());
        }
        region_order(child, out);
    }
}

/// Parses a PageXML document. `source` names it in messages and provides
/// the page id.
pub fn parse_page_xml(bytes: &[u8], source: &str) -> Result<PageDocument> {
    let parse_err = |message: String| Error::Parse {
        source_name: source.to_string(),
        message,
    };
    let text = std::str::from_utf8(bytes)
        .map_err(|e| parse_err(format!("invalid UTF-8 at byte {}", e.valid_up_to())))?;
    let doc = Document::parse(text).map_err(|e| parse_err(e.to_string()))?;
    let mut warnings = Vec::new();

    // Lines grouped by their enclosing region, in document order.
    let mut groups: Vec<(Option<String>, Vec<Node>)> = Vec::new();
    for node in doc.descendants().filter(|n| is(n, "TextLine")) {
        let region = node
            .ancestors()
            .skip(1)
            .find(|a| a.is_element() && a.tag_name().name().ends_with("Region"))
            .and_then(|r| r.attribute("id"))
            .map(str::to_string);
        match groups.last_mut() {
            Some((r, lines)) if *r == region && region.is_some() => lines.push(node),
            _ => groups.push((region, vec![node])),
        }
    }

    let mut order = Vec::new();
    if let Some(ro) = doc.descendants().find(|n| is(n, "ReadingOrder")) {
        region_order(ro, &mut order);
    }
    if !order.is_empty() {
        let rank: HashMap<&str, usize> = order
            .iter()
            .enumerate()
            .rev()
            .map(|(k, id)| (id.as_str(), k))
            .collect();
        let key = |r: &Option<String>| {
            r.as_deref()
                .and_then(|id| rank.get(id).copied())
                .unwrap_or(usize::MAX)
        };
        groups.sort_by_key(|(r, _)| key(r));
    }

    let mut lines = Vec::new();
    for (_, mut nodes) in groups {
        if nodes.iter().all(|n| custom_index(*n).is_some()) {
            nodes.sort_by_key(|n| custom_index(*n));
        }
        for node in nodes {
            let id = node.attribute("id").map(str::to_string);
            let label = id
                .clone()
                .unwrap_or_else(|| format!("line {}", lines.len() + 1));
            let mut raw = line_text(node);
            if raw.contains(['\n', '\r']) {
                warnings.push(format!(
                    "{source}: {label}: line breaks in text replaced by spaces"
                ));
                raw = raw.replace("\r\n", " ").replace(['\n', '\r'], " ");
            }
            let (mut line, stripped) = Line::normalized(&raw)?;
            if stripped {
                warnings.push(format!(
                    "{source}: {label}: stripped leading/trailing spaces"
                ));
            }
            if let Some(b) = named(node, "Baseline").next() {
                match b.attribute("points").and_then(parse_points) {
                    Some(baseline) => line.set_baseline(Some(baseline)),
                    None => warnings.push(format!(
                        "{source}: {label}: malformed baseline points, baseline dropped"
                    )),
                }
            }
            if let Some(id) = id {
                line = line.with_id(id);
            }
            lines.push(line);
        }
    }

    Ok(PageDocument {
        source_path: source.to_string(),
        page: Page::new(crate::io::stem(std::path::Path::new(source)), lines),
        warnings,
    })
}
