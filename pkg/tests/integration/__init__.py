# Integration tests for the ramseytype CLI
