# Test package for lib module
