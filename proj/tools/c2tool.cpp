// Placeholder main; the full CLI lands with the reduction module.
int main() { return 0; }
