#![no_main]
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    // Decoding must never panic; an accepted document must re-encode and
    // decode to the same diagram.
    if let Ok(doc) = ribbonfold::from_document(text) {
        let again = ribbonfold::to_document(&doc.diagram, doc.reports.as_ref()).expect("re-encode");
        let back = ribbonfold::from_document(&again).expect("re-decode");
        assert_eq!(back.diagram, doc.diagram);
    }
});
