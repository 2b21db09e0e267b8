# Test package for oracle module
