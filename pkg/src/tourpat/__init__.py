"""Pattern counting, detection and reduction gadgets for tournaments."""
