# Test package for pipeline module
