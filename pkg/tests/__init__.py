# subperm-patterns のテスト
