# Test package for funcspace module
