// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The wavefeat Authors

#include "commands.hpp"

int main(int argc, char** argv) {
    return wavefeat::cli::run(argc, argv);
}
