"""3-role assignments of complementary prisms."""
