# Test package for reduce module
