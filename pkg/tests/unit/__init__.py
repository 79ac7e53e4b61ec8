# Unit tests for ramseytype modules
