use std::ffi::{CStr, CString};
use std::ptr;

use spined_ffi::*;

unsafe fn graph(vertices: usize, edges: &[usize]) -> *mut SpinedGraph {
    let mut g = ptr::null_mut();
    let status = spined_graph_new(vertices, edges.as_ptr(), edges.len() / 2, &mut g);
    assert_eq!(status, SpinedStatus::Ok);
    g
}

#[test]
fn cycle_widths() {
    unsafe {
        let g = graph(5, &[0, 1, 1, 2, 2, 3, 3, 4, 4, 0]);
        let mut n = 0;
        assert_eq!(spined_graph_vertex_count(g, &mut n), SpinedStatus::Ok);
        assert_eq!(n, 5);
        assert_eq!(spined_graph_edge_count(g, &mut n), SpinedStatus::Ok);
        assert_eq!(n, 5);

        let mut w = 0;
        assert_eq!(spined_graph_delta(g, SpinedConvention::Paper, &mut w), SpinedStatus::Ok);
        assert_eq!(w, 3);
        assert_eq!(
            spined_graph_delta(g, SpinedConvention::Standard, &mut w),
            SpinedStatus::Ok
        );
        assert_eq!(w, 2);
        assert_eq!(
            spined_graph_treewidth_oracle(g, SpinedConvention::Standard, &mut w),
            SpinedStatus::Ok
        );
        assert_eq!(w, 2);
        assert_eq!(spined_graph_clique_number(g, &mut w), SpinedStatus::Ok);
        assert_eq!(w, 2);

        let mut chordal = true;
        assert_eq!(spined_graph_is_chordal(g, &mut chordal), SpinedStatus::Ok);
        assert!(!chordal);
        spined_graph_free(g);
    }
}

#[test]
fn parse_formats() {
    unsafe {
        let text = CString::new("p edge 3 2\ne 1 2\ne 2 3\n").unwrap();
        let mut g = ptr::null_mut();
        assert_eq!(
            spined_graph_parse(text.as_ptr(), SpinedFormat::Dimacs, &mut g),
            SpinedStatus::Ok
        );
        let mut w = 0;
        assert_eq!(spined_graph_delta(g, SpinedConvention::Paper, &mut w), SpinedStatus::Ok);
        assert_eq!(w, 2);
        spined_graph_free(g);

        let text = CString::new(r#"{"vertices":4,"hyperedges":[[0,1,2],[2,3]]}"#).unwrap();
        let mut h = ptr::null_mut();
        assert_eq!(
            spined_hypergraph_parse(text.as_ptr(), SpinedHypergraphFormat::Json, &mut h),
            SpinedStatus::Ok
        );
        assert_eq!(spined_hypergraph_edge_count(h, &mut w), SpinedStatus::Ok);
        assert_eq!(w, 2);
        assert_eq!(
            spined_hypergraph_delta(h, SpinedConvention::Paper, &mut w),
            SpinedStatus::Ok
        );
        assert_eq!(w, 3);
        spined_hypergraph_free(h);
    }
}

#[test]
fn errors_set_status_and_message() {
    unsafe {
        let mut g = ptr::null_mut();
        let edges = [0usize, 7];
        assert_eq!(spined_graph_new(3, edges.as_ptr(), 1, &mut g), SpinedStatus::RangeError);
        assert!(g.is_null());
        let msg = CStr::from_ptr(spined_last_error_message()).to_str().unwrap();
        assert!(!msg.is_empty());

        let bad = CString::new("p edge x\n").unwrap();
        assert_eq!(
            spined_graph_parse(bad.as_ptr(), SpinedFormat::Dimacs, &mut g),
            SpinedStatus::ParseError
        );

        let mut w = 0;
        assert_eq!(
            spined_graph_delta(ptr::null(), SpinedConvention::Paper, &mut w),
            SpinedStatus::NullPointer
        );
        assert_eq!(
            spined_graph_parse(ptr::null(), SpinedFormat::EdgeList, &mut g),
            SpinedStatus::NullPointer
        );

        let big = graph(17, &[]);
        assert_eq!(
            spined_graph_treewidth_oracle(big, SpinedConvention::Paper, &mut w),
            SpinedStatus::BoundExceeded
        );
        spined_graph_free(big);
        spined_graph_free(ptr::null_mut());
    }
}

#[test]
fn version_matches_crate() {
    let v = unsafe { CStr::from_ptr(spined_version()) };
    assert_eq!(v.to_str().unwrap(), env!("CARGO_PKG_VERSION"));
}
