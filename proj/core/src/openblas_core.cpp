// Copyright 2026 The ginibre-edge Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


// Linked into executables when the build detected OpenBLAS kernels that
// factorise incorrectly on this CPU. OpenBLAS reads OPENBLAS_CORETYPE while
// shared libraries initialise, and the C library resets environ after
// preinit, so the process re-executes itself once with the variable set.
// A value already present in the environment is left alone.

#include <unistd.h>

#include <cstdlib>
#include <cstring>

namespace {

void select_openblas_core(int, char** argv, char** envp) {
  constexpr char kName[] = "OPENBLAS_CORETYPE=";
  int count = 0;
  for (; envp[count] != nullptr; ++count) {
    if (std::strncmp(envp[count], kName, sizeof(kName) - 1) == 0) return;
  }
  static char entry[] = "OPENBLAS_CORETYPE=" GINIBRE_EDGE_OPENBLAS_CORETYPE;
  auto** env = static_cast<char**>(std::malloc(sizeof(char*) * (count + 2)));
  if (env == nullptr) return;
  for (int i = 0; i < count; ++i) env[i] = envp[i];
  env[count] = entry;
  env[count + 1] = nullptr;
  execve("/proc/self/exe", argv, env);
  std::free(env);
}

}  // namespace

__attribute__((section(".preinit_array"), used)) static void (*const kSelectCore)(int, char**, char**) =
    &select_openblas_core;
