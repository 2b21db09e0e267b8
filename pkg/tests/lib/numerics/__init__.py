# Test package for numerics module
