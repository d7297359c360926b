# Tests package for perverse-disc
