use std::collections::BTreeMap;
use std::path::{Path, PathBuf};

use crate::error::{Error, Result};
use crate::io::{load_page, page_files, stem};
use crate::types::{Page, PagePair, TestSet};

/// How unpaired files are treated.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct PairOptions {
    /// Skip GT files without hypothesis (with a warning) instead of failing.
    pub skip_unpaired_gt: bool,
    /// Count hypothesis files without GT as pages whose every line is wrong.
    pub strict_hyp: bool,
}

#[derive(Debug, Clone)]
pub struct PairedTestSet {
    pub set: TestSet,
    pub warnings: Vec<String>,
}

fn by_stem(dir: &Path) -> Result<BTreeMap<String, PathBuf>> {
    let mut out: BTreeMap<String, PathBuf> = BTreeMap::new();
    for path in page_files(dir)? {
        let id = stem(&path);
        if let Some(first) = out.get(&id) {
            return Err(Error::DuplicateId {
                id,
                first: first.clone(),
                second: path,
            });
        }
        out.insert(id, path);
    }
    Ok(out)
}

/// Pairs ground truth and hypotheses. Both paths are files (one page pair) or
/// both are directories, whose files are paired by name without extension.
pub fn pair_test_set(
    gt: impl AsRef<Path>,
    hyp: impl AsRef<Path>,
    options: PairOptions,
) -> Result<PairedTestSet> {
    let (gt, hyp) = (gt.as_ref(), hyp.as_ref());
    let mut warnings = Vec::new();
    let mut pairs = Vec::new();
    let load = |path: &Path, warnings: &mut Vec<String>| -> Result<Page> {
        let doc = load_page(path)?;
        warnings.extend(doc.warnings);
        Ok(doc.page)
    };

    match (gt.is_dir(), hyp.is_dir()) {
        (false, false) => {
            let gt_page = load(gt, &mut warnings)?;
            let hyp_page = load(hyp, &mut warnings)?;
            pairs.push(PagePair {
                id: gt_page.id.clone(),
                gt: gt_page,
                hyp: hyp_page,
            });
        }
        (true, true) => {
            let gts = by_stem(gt)?;
            let hyps = by_stem(hyp)?;
            for (id, gt_path) in &gts {
                match hyps.get(id) {
                    Some(hyp_path) => pairs.push(PagePair {
                        id: id.clone(),
                        gt: load(gt_path, &mut warnings)?,
                        hyp: load(hyp_path, &mut warnings)?,
                    }),
                    None if options.skip_unpaired_gt => {
                        warnings.push(format!("skipping '{id}': no hypothesis file"));
                    }
                    None => return Err(Error::Unpaired(id.clone())),
                }
            }
            for (id, hyp_path) in hyps.iter().filter(|(id, _)| !gts.contains_key(*id)) {
                if options.strict_hyp {
                    warnings.push(format!(
                        "'{id}' has no ground truth; all its lines count as deletions"
                    ));
                    pairs.push(PagePair {
                        id: id.clone(),
                        gt: Page::new(id.clone(), Vec::new()),
                        hyp: load(hyp_path, &mut warnings)?,
                    });
                } else {
                    warnings.push(format!("ignoring hypothesis '{id}': no ground-truth file"));
                }
            }
        }
        _ => {
            return Err(Error::config(
                "--gt and --hyp must both be files or both be directories",
            ))
        }
    }
    Ok(PairedTestSet {
        set: TestSet::new(pairs)?,
        warnings,
    })
}
