//! Empty: this package only carries the `acceptance` test target, kept
//! apart from the library's own tests so a red criterion never stops them
//! from running.
