//! Line-oriented checkpoint log.
//!
//! Layout:
//!
//! ```text
//! ptsearch-checkpoint v1
//! config <space-separated key=value fields>
//! input-sha256 <hex>
//! config-hash <hex>
//! witness <task> <graph> <u-v,u-v|-> <surftri line>
//! task <task> graph <graph> subsets <lo>..<hi> status <exhausted|witnesses=N|panicked> skipped <count>
//! ...
//! complete tasks=<T>
//! ```
//!
//! Witness lines precede the task line that commits them; task lines are
//! flushed strictly in task order, so an uncorrupted log is a contiguous
//! prefix (resumed runs may append newer lines for re-run panicked tasks;
//! the last line per task wins). Replaying a checkpoint reproduces the
//! exact resumed state.

use crate::config::{config_hash, SearchConfig};
use anyhow::{bail, Context, Result};
use std::collections::BTreeMap;
use std::io::Write;
use std::path::Path;

pub const MAGIC: &str = "ptsearch-checkpoint v1";

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TaskStatus {
    Exhausted,
    WitnessesFound(usize),
    Panicked,
}

impl TaskStatus {
    fn to_field(&self) -> String {
        match self {
            TaskStatus::Exhausted => "exhausted".to_string(),
            TaskStatus::WitnessesFound(n) => format!("witnesses={n}"),
            TaskStatus::Panicked => "panicked".to_string(),
        }
    }

    fn parse(text: &str) -> Result<TaskStatus> {
        if text == "exhausted" {
            return Ok(TaskStatus::Exhausted);
        }
        if text == "panicked" {
            return Ok(TaskStatus::Panicked);
        }
        if let Some(n) = text.strip_prefix("witnesses=") {
            return Ok(TaskStatus::WitnessesFound(n.parse().context("witness count")?));
        }
        bail!("unknown task status `{text}`");
    }
}

/// One witness as logged: originating graph, removed edges, rotation line.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WitnessRecord {
    pub graph_idx: usize,
    pub removed: Vec<(usize, usize)>,
    pub surftri: String,
}

impl WitnessRecord {
    pub fn removed_field(&self) -> String {
        if self.removed.is_empty() {
            "-".to_string()
        } else {
            self.removed
                .iter()
                .map(|(u, v)| format!("{u}-{v}"))
                .collect::<Vec<_>>()
                .join(",")
        }
    }

    pub fn parse_removed(field: &str) -> Result<Vec<(usize, usize)>> {
        if field == "-" {
            return Ok(Vec::new());
        }
        field
            .split(',')
            .map(|pair| {
                let (u, v) = pair
                    .split_once('-')
                    .with_context(|| format!("malformed removed edge `{pair}`"))?;
                Ok((u.parse()?, v.parse()?))
            })
            .collect()
    }

    /// The line used in the final witness file.
    pub fn to_output_line(&self) -> String {
        format!("{}\t{}\t{}", self.graph_idx, self.removed_field(), self.surftri)
    }

    pub fn from_output_line(line: &str) -> Result<WitnessRecord> {
        let mut parts = line.splitn(3, '\t');
        let graph_idx = parts.next().context("missing graph index")?.parse()?;
        let removed = Self::parse_removed(parts.next().context("missing removed field")?)?;
        let surftri = parts.next().context("missing embedding field")?.to_string();
        Ok(WitnessRecord { graph_idx, removed, surftri })
    }
}

#[derive(Clone, Debug, Default)]
pub struct TaskRecord {
    pub graph_idx: usize,
    pub subset_lo: u64,
    pub subset_hi: u64,
    pub status: TaskStatus,
    pub skipped: u64,
    pub witnesses: Vec<WitnessRecord>,
}

impl Default for TaskStatus {
    fn default() -> Self {
        TaskStatus::Exhausted
    }
}

pub struct CheckpointWriter {
    file: std::fs::File,
}

impl CheckpointWriter {
    /// Starts a fresh checkpoint with a full header.
    pub fn create(path: &Path, config: &SearchConfig, input_sha: &str) -> Result<Self> {
        let mut file = std::fs::File::create(path)
            .with_context(|| format!("creating checkpoint {}", path.display()))?;
        let config_line = config.to_line();
        let hash = config_hash(&config_line, input_sha);
        writeln!(file, "{MAGIC}")?;
        writeln!(file, "{config_line}")?;
        writeln!(file, "input-sha256 {input_sha}")?;
        writeln!(file, "config-hash {hash}")?;
        file.flush()?;
        Ok(CheckpointWriter { file })
    }

    /// Reopens an existing checkpoint for appending.
    pub fn append(path: &Path) -> Result<Self> {
        let file = std::fs::OpenOptions::new()
            .append(true)
            .open(path)
            .with_context(|| format!("opening checkpoint {}", path.display()))?;
        Ok(CheckpointWriter { file })
    }

    /// Commits one finished task: its witnesses first, then the task line.
    pub fn commit_task(&mut self, task_idx: u64, record: &TaskRecord) -> Result<()> {
        for w in &record.witnesses {
            writeln!(
                self.file,
                "witness {task_idx} {} {} {}",
                w.graph_idx,
                w.removed_field(),
                w.surftri
            )?;
        }
        writeln!(
            self.file,
            "task {task_idx} graph {} subsets {}..{} status {} skipped {}",
            record.graph_idx,
            record.subset_lo,
            record.subset_hi,
            record.status.to_field(),
            record.skipped
        )?;
        self.file.flush()?;
        Ok(())
    }

    pub fn mark_complete(&mut self, tasks: u64) -> Result<()> {
        writeln!(self.file, "complete tasks={tasks}")?;
        self.file.flush()?;
        Ok(())
    }
}

#[derive(Debug)]
pub struct ReplayedCheckpoint {
    pub config: SearchConfig,
    pub input_sha: String,
    /// Completed (non-panicked) tasks by index; replay is idempotent.
    pub tasks: BTreeMap<u64, TaskRecord>,
    /// Tasks whose last record is a panic.
    pub panicked: Vec<u64>,
    /// One past the highest task index seen.
    pub frontier: u64,
    pub complete: Option<u64>,
}

/// Parses and verifies a checkpoint. Refuses corrupted logs outright; the
/// caller should instruct a fresh start.
pub fn replay(path: &Path) -> Result<ReplayedCheckpoint> {
    let text = std::fs::read_to_string(path)
        .with_context(|| format!("reading checkpoint {}", path.display()))?;
    let mut lines = text.lines();
    let corrupt = |why: &str| -> anyhow::Error {
        anyhow::anyhow!(
            "checkpoint {} is corrupted ({why}); delete it and start a fresh search",
            path.display()
        )
    };
    if lines.next() != Some(MAGIC) {
        return Err(corrupt("bad magic line"));
    }
    let config_line = lines.next().ok_or_else(|| corrupt("missing config line"))?;
    if !config_line.starts_with("config ") {
        return Err(corrupt("missing config line"));
    }
    let config = SearchConfig::from_line(config_line, path)
        .map_err(|e| corrupt(&format!("unparseable config: {e}")))?;
    let input_sha = lines
        .next()
        .and_then(|l| l.strip_prefix("input-sha256 "))
        .ok_or_else(|| corrupt("missing input-sha256 line"))?
        .to_string();
    let stored_hash = lines
        .next()
        .and_then(|l| l.strip_prefix("config-hash "))
        .ok_or_else(|| corrupt("missing config-hash line"))?;
    if stored_hash != config_hash(config_line, &input_sha) {
        return Err(corrupt("config hash mismatch"));
    }

    let mut tasks: BTreeMap<u64, TaskRecord> = BTreeMap::new();
    let mut pending_witnesses: Vec<(u64, WitnessRecord)> = Vec::new();
    let mut frontier = 0u64;
    let mut complete = None;
    let mut last_flushed: Option<u64> = None;
    for line in lines {
        if line.is_empty() {
            continue;
        }
        let mut words = line.split(' ');
        match words.next() {
            Some("witness") => {
                let task_idx: u64 =
                    words.next().ok_or_else(|| corrupt("witness missing task"))?.parse()
                        .map_err(|_| corrupt("witness task index"))?;
                let graph_idx: usize =
                    words.next().ok_or_else(|| corrupt("witness missing graph"))?.parse()
                        .map_err(|_| corrupt("witness graph index"))?;
                let removed_field =
                    words.next().ok_or_else(|| corrupt("witness missing removed"))?;
                let removed = WitnessRecord::parse_removed(removed_field)
                    .map_err(|_| corrupt("witness removed field"))?;
                let surftri: String = words.collect::<Vec<_>>().join(" ");
                if surftri.is_empty() {
                    return Err(corrupt("witness missing embedding"));
                }
                pending_witnesses.push((task_idx, WitnessRecord { graph_idx, removed, surftri }));
            }
            Some("task") => {
                let task_idx: u64 =
                    words.next().ok_or_else(|| corrupt("task missing index"))?.parse()
                        .map_err(|_| corrupt("task index"))?;
                let rest: Vec<&str> = words.collect();
                // graph G subsets LO..HI status S skipped K
                if rest.len() != 8
                    || rest[0] != "graph"
                    || rest[2] != "subsets"
                    || rest[4] != "status"
                    || rest[6] != "skipped"
                {
                    return Err(corrupt("malformed task line"));
                }
                let graph_idx: usize =
                    rest[1].parse().map_err(|_| corrupt("task graph index"))?;
                let (lo, hi) =
                    rest[3].split_once("..").ok_or_else(|| corrupt("task subset range"))?;
                let status =
                    TaskStatus::parse(rest[5]).map_err(|_| corrupt("task status"))?;
                let skipped: u64 =
                    rest[7].parse().map_err(|_| corrupt("task skipped count"))?;
                let witnesses: Vec<WitnessRecord> = pending_witnesses
                    .drain(..)
                    .filter_map(|(t, w)| (t == task_idx).then_some(w))
                    .collect();
                if let TaskStatus::WitnessesFound(n) = status {
                    if witnesses.len() != n {
                        return Err(corrupt("witness count mismatch"));
                    }
                } else if !witnesses.is_empty() {
                    return Err(corrupt("witnesses attached to a task without any"));
                }
                // Within one run's flush the indices increase; a resumed run
                // may revisit earlier panicked indices.
                if let Some(prev) = last_flushed {
                    if task_idx <= prev && !matches!(tasks.get(&task_idx).map(|t| &t.status), Some(TaskStatus::Panicked)) {
                        return Err(corrupt("task indices are not increasing"));
                    }
                }
                last_flushed = Some(task_idx);
                let record = TaskRecord {
                    graph_idx,
                    subset_lo: lo.parse().map_err(|_| corrupt("task subset lo"))?,
                    subset_hi: hi.parse().map_err(|_| corrupt("task subset hi"))?,
                    status,
                    skipped,
                    witnesses,
                };
                frontier = frontier.max(task_idx + 1);
                tasks.insert(task_idx, record);
            }
            Some("complete") => {
                let field: String = words.collect();
                let t = field
                    .strip_prefix("tasks=")
                    .ok_or_else(|| corrupt("malformed complete line"))?;
                complete = Some(t.parse().map_err(|_| corrupt("complete count"))?);
            }
            _ => return Err(corrupt("unrecognized line")),
        }
    }
    if !pending_witnesses.is_empty() {
        return Err(corrupt("dangling witness lines without a task"));
    }
    // The contiguous-prefix invariant: every index below the frontier has a
    // record.
    for idx in 0..frontier {
        if !tasks.contains_key(&idx) {
            return Err(corrupt("task prefix has a gap"));
        }
    }
    let panicked: Vec<u64> = tasks
        .iter()
        .filter(|(_, r)| r.status == TaskStatus::Panicked)
        .map(|(&i, _)| i)
        .collect();
    Ok(ReplayedCheckpoint { config, input_sha, tasks, panicked, frontier, complete })
}
