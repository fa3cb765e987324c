use linkpart_core::longpath::CoverSample;
use serde::Serialize;

/// One carving step of a pattern-cover draw; `draw` numbers the draws of a run.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TraceRecord {
    pub draw: usize,
    pub i: usize,
    pub v_i: usize,
    pub r_i: usize,
    pub ball_size: usize,
    pub boundary_size: usize,
    pub sampled_l: usize,
    pub aborted: bool,
}

impl TraceRecord {
    pub fn from_sample(draw: usize, s: &CoverSample) -> impl Iterator<Item = TraceRecord> + '_ {
        s.clusters.iter().enumerate().map(move |(i, c)| TraceRecord {
            draw,
            i,
            v_i: c.center,
            r_i: c.radius,
            ball_size: c.ball_size,
            boundary_size: c.boundary_size,
            sampled_l: c.sampled,
            aborted: s.aborted,
        })
    }

    pub fn to_json_line(&self) -> String {
        let mut s = serde_json::to_string(self).expect("trace record serializes");
        s.push('\n');
        s
    }
}
