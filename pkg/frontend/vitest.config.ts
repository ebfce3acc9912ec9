import { defineConfig } from "vitest/config";

export default defineConfig({
  test: {
    // Full-catalog render tests rasterize 13 figures each; give them room
    // on slow single-core machines.
    testTimeout: 120_000,
  },
});
