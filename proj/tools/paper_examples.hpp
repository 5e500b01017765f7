#pragma once

// Runs the worked-example corpus and prints one line per check. Returns
// the number of failures; the transcript is deterministic byte for byte.
int run_paper_examples();
