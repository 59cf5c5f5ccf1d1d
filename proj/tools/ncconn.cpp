// Placeholder main; the CLI is assembled once the engine modules are in place.
int main() { return 0; }
