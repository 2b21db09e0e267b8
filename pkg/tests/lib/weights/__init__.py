# Test package for weights module
