#!/usr/bin/env python3
"""Generate the desk corpus: sibling programs in ten languages.

Every file index shares one task plan across languages, so the files differ
in syntax but not in what they compute. Output is deterministic.

    python3 scripts/gen_desk_corpus.py [out_dir] [files_per_language]
"""

import os
import random
import sys

WORDS = [
    "orders", "prices", "scores", "points", "levels", "weights", "ticks",
    "items", "rows", "cells", "moves", "steps", "votes", "bytes", "pages",
    "hits", "misses", "jobs", "tasks", "users", "events", "loads", "bids",
    "frames", "samples", "tokens", "blocks", "lines", "peaks", "rates",
]

TASKS = ["sum", "max", "count", "clamp", "fib", "describe", "divide", "counter"]


def camel(parts):
    return parts[0] + "".join(p.capitalize() for p in parts[1:])


def pascal(parts):
    return "".join(p.capitalize() for p in parts)


def snake(parts):
    return "_".join(parts)


BASES = {
    "sum": ["sum", "values"],
    "max": ["max", "value"],
    "count": ["count", "matches"],
    "clamp": ["clamp"],
    "fib": ["fibonacci"],
    "describe": ["describe"],
    "divide": ["safe", "divide"],
    "counter": ["counter"],
}


def plan(index):
    rng = random.Random(1000 + index)
    n = rng.randint(5, 10)
    tasks = [rng.choice(TASKS) for _ in range(n)]
    if "sum" not in tasks:
        tasks[0] = "sum"
    used = set()
    entries = []
    for t in tasks:
        while True:
            word = rng.choice(WORDS)
            if (t, word) not in used:
                used.add((t, word))
                break
        entries.append({
            "task": t,
            "parts": BASES[t] + [word],
            "k": rng.randint(2, 97),
            "data": [rng.randint(0, 50) for _ in range(rng.randint(3, 7))],
        })
    return entries


# ----------------------------------------------------------------------------
# Python

def py_task(e):
    name = snake(e["parts"])
    t, k = e["task"], e["k"]
    if t == "sum":
        return f"""def {name}(items):
    total = 0
    for item in items:
        total += item
    return total
"""
    if t == "max":
        return f"""def {name}(items):
    best = items[0]
    for item in items:
        if item > best:
            best = item
    return best
"""
    if t == "count":
        return f"""def {name}(items, target):
    count = 0
    for item in items:
        if item == target:
            count += 1
    return count
"""
    if t == "clamp":
        return f"""def {name}(x, lo, hi):
    if x < lo:
        return lo
    elif x > hi:
        return hi
    return x
"""
    if t == "fib":
        return f"""def {name}(n):
    a, b = 0, 1
    i = 0
    while i < n:
        a, b = b, a + b
        i += 1
    return a
"""
    if t == "describe":
        return f"""def {name}(label, value):
    text = label + ": " + str(value * {k})
    return text.upper()
"""
    if t == "divide":
        return f"""def {name}(a, b):
    try:
        return a / b
    except ZeroDivisionError:
        return {k}
"""
    if t == "counter":
        cls = pascal(e["parts"])
        return f"""class {cls}:
    def __init__(self, start):
        self.value = start

    def increment(self, step):
        self.value += step
        return self.value

    def reset(self):
        self.value = {k}
"""


def py_call(e):
    name = snake(e["parts"])
    data = ", ".join(map(str, e["data"]))
    t, k = e["task"], e["k"]
    return {
        "sum": f"    print({name}([{data}]))",
        "max": f"    print({name}([{data}]))",
        "count": f"    print({name}([{data}], {e['data'][0]}))",
        "clamp": f"    print({name}({k}, 10, 50))",
        "fib": f"    print({name}({k % 20}))",
        "describe": f"    print({name}(\"total\", {k}))",
        "divide": f"    print({name}({k}, {e['data'][0]}))",
        "counter": f"    print({pascal(e['parts'])}({k}).increment(1))",
    }[t]


def render_python(entries):
    out = ["import math", ""]
    for e in entries:
        out.append(py_task(e))
        out.append("")
    out.append("def main():")
    out.extend(py_call(e) for e in entries)
    out.append("    print(math.pi)")
    out.append("")
    out.append("")
    out.append('if __name__ == "__main__":')
    out.append("    main()")
    return "\n".join(out) + "\n"


# ----------------------------------------------------------------------------
# JavaScript and TypeScript share one renderer; `ts` adds annotations.

def js_task(e, ts):
    name = camel(e["parts"])
    t, k = e["task"], e["k"]
    arr = ": number[]" if ts else ""
    num = ": number" if ts else ""
    s = ": string" if ts else ""
    ret_n = ": number" if ts else ""
    ret_s = ": string" if ts else ""
    if t == "sum":
        return f"""function {name}(items{arr}){ret_n} {{
  let total = 0;
  for (const item of items) {{
    total += item;
  }}
  return total;
}}
"""
    if t == "max":
        return f"""function {name}(items{arr}){ret_n} {{
  let best = items[0];
  for (const item of items) {{
    if (item > best) {{
      best = item;
    }}
  }}
  return best;
}}
"""
    if t == "count":
        return f"""function {name}(items{arr}, target{num}){ret_n} {{
  let count = 0;
  for (const item of items) {{
    if (item === target) {{
      count += 1;
    }}
  }}
  return count;
}}
"""
    if t == "clamp":
        return f"""function {name}(x{num}, lo{num}, hi{num}){ret_n} {{
  if (x < lo) {{
    return lo;
  }} else if (x > hi) {{
    return hi;
  }}
  return x;
}}
"""
    if t == "fib":
        return f"""function {name}(n{num}){ret_n} {{
  let a = 0;
  let b = 1;
  for (let i = 0; i < n; i++) {{
    const next = a + b;
    a = b;
    b = next;
  }}
  return a;
}}
"""
    if t == "describe":
        return f"""function {name}(label{s}, value{num}){ret_s} {{
  const text = label + ": " + String(value * {k});
  return text.toUpperCase();
}}
"""
    if t == "divide":
        return f"""function {name}(a{num}, b{num}){ret_n} {{
  try {{
    if (b === 0) {{
      throw new Error("division by zero");
    }}
    return a / b;
  }} catch (err) {{
    return {k};
  }}
}}
"""
    if t == "counter":
        cls = pascal(e["parts"])
        field = "  value: number;\n\n" if ts else ""
        return f"""class {cls} {{
{field}  constructor(start{num}) {{
    this.value = start;
  }}

  increment(step{num}){ret_n} {{
    this.value += step;
    return this.value;
  }}

  reset() {{
    this.value = {k};
  }}
}}
"""


def js_call(e):
    name = camel(e["parts"])
    data = ", ".join(map(str, e["data"]))
    t, k = e["task"], e["k"]
    return {
        "sum": f"  console.log({name}([{data}]));",
        "max": f"  console.log({name}([{data}]));",
        "count": f"  console.log({name}([{data}], {e['data'][0]}));",
        "clamp": f"  console.log({name}({k}, 10, 50));",
        "fib": f"  console.log({name}({k % 20}));",
        "describe": f"  console.log({name}(\"total\", {k}));",
        "divide": f"  console.log({name}({k}, {e['data'][0]}));",
        "counter": f"  console.log(new {pascal(e['parts'])}({k}).increment(1));",
    }[t]


def render_js(entries, ts=False):
    out = ["\"use strict\";", ""]
    for e in entries:
        out.append(js_task(e, ts))
    out.append("function main()" + (": void" if ts else "") + " {")
    out.extend(js_call(e) for e in entries)
    out.append("  console.log(Math.PI);")
    out.append("}")
    out.append("")
    out.append("main();")
    return "\n".join(out) + "\n"


# ----------------------------------------------------------------------------
# Java

def java_task(e):
    name = camel(e["parts"])
    t, k = e["task"], e["k"]
    if t == "sum":
        return f"""    static int {name}(int[] items) {{
        int total = 0;
        for (int item : items) {{
            total += item;
        }}
        return total;
    }}
"""
    if t == "max":
        return f"""    static int {name}(int[] items) {{
        int best = items[0];
        for (int item : items) {{
            if (item > best) {{
                best = item;
            }}
        }}
        return best;
    }}
"""
    if t == "count":
        return f"""    static int {name}(int[] items, int target) {{
        int count = 0;
        for (int item : items) {{
            if (item == target) {{
                count++;
            }}
        }}
        return count;
    }}
"""
    if t == "clamp":
        return f"""    static int {name}(int x, int lo, int hi) {{
        if (x < lo) {{
            return lo;
        }} else if (x > hi) {{
            return hi;
        }}
        return x;
    }}
"""
    if t == "fib":
        return f"""    static long {name}(int n) {{
        long a = 0;
        long b = 1;
        for (int i = 0; i < n; i++) {{
            long next = a + b;
            a = b;
            b = next;
        }}
        return a;
    }}
"""
    if t == "describe":
        return f"""    static String {name}(String label, int value) {{
        String text = label + ": " + (value * {k});
        return text.toUpperCase();
    }}
"""
    if t == "divide":
        return f"""    static int {name}(int a, int b) {{
        try {{
            return a / b;
        }} catch (ArithmeticException e) {{
            return {k};
        }}
    }}
"""
    if t == "counter":
        cls = pascal(e["parts"])
        return f"""    static class {cls} {{
        private int value;

        {cls}(int start) {{
            this.value = start;
        }}

        int increment(int step) {{
            value += step;
            return value;
        }}

        void reset() {{
            value = {k};
        }}
    }}
"""


def java_call(e, indent="        "):
    name = camel(e["parts"])
    data = ", ".join(map(str, e["data"]))
    t, k = e["task"], e["k"]
    return indent + {
        "sum": f"System.out.println({name}(new int[] {{{data}}}));",
        "max": f"System.out.println({name}(new int[] {{{data}}}));",
        "count": f"System.out.println({name}(new int[] {{{data}}}, {e['data'][0]}));",
        "clamp": f"System.out.println({name}({k}, 10, 50));",
        "fib": f"System.out.println({name}({k % 20}));",
        "describe": f"System.out.println({name}(\"total\", {k}));",
        "divide": f"System.out.println({name}({k}, {e['data'][0]}));",
        "counter": f"System.out.println(new {pascal(e['parts'])}({k}).increment(1));",
    }[t]


def render_java(entries, index):
    out = ["package desk;", "", "import java.util.Arrays;", "", f"public class Module{index:02d} {{"]
    for e in entries:
        out.append(java_task(e))
    out.append("    public static void main(String[] args) {")
    out.extend(java_call(e) for e in entries)
    out.append("        System.out.println(Arrays.toString(args));")
    out.append("    }")
    out.append("}")
    return "\n".join(out) + "\n"


# ----------------------------------------------------------------------------
# C#

def cs_task(e):
    name = pascal(e["parts"])
    t, k = e["task"], e["k"]
    if t == "sum":
        return f"""        public static int {name}(int[] items)
        {{
            int total = 0;
            foreach (var item in items)
            {{
                total += item;
            }}
            return total;
        }}
"""
    if t == "max":
        return f"""        public static int {name}(int[] items)
        {{
            int best = items[0];
            foreach (var item in items)
            {{
                if (item > best)
                {{
                    best = item;
                }}
            }}
            return best;
        }}
"""
    if t == "count":
        return f"""        public static int {name}(int[] items, int target)
        {{
            int count = 0;
            foreach (var item in items)
            {{
                if (item == target)
                {{
                    count++;
                }}
            }}
            return count;
        }}
"""
    if t == "clamp":
        return f"""        public static int {name}(int x, int lo, int hi)
        {{
            if (x < lo)
            {{
                return lo;
            }}
            else if (x > hi)
            {{
                return hi;
            }}
            return x;
        }}
"""
    if t == "fib":
        return f"""        public static long {name}(int n)
        {{
            long a = 0;
            long b = 1;
            for (int i = 0; i < n; i++)
            {{
                long next = a + b;
                a = b;
                b = next;
            }}
            return a;
        }}
"""
    if t == "describe":
        return f"""        public static string {name}(string label, int value)
        {{
            string text = label + ": " + (value * {k});
            return text.ToUpper();
        }}
"""
    if t == "divide":
        return f"""        public static int {name}(int a, int b)
        {{
            try
            {{
                return a / b;
            }}
            catch (DivideByZeroException)
            {{
                return {k};
            }}
        }}
"""
    if t == "counter":
        cls = pascal(e["parts"])
        return f"""        public class {cls}
        {{
            private int value;

            public {cls}(int start)
            {{
                value = start;
            }}

            public int Increment(int step)
            {{
                value += step;
                return value;
            }}

            public void Reset()
            {{
                value = {k};
            }}
        }}
"""


def cs_call(e):
    name = pascal(e["parts"])
    data = ", ".join(map(str, e["data"]))
    t, k = e["task"], e["k"]
    return "            " + {
        "sum": f"Console.WriteLine({name}(new[] {{ {data} }}));",
        "max": f"Console.WriteLine({name}(new[] {{ {data} }}));",
        "count": f"Console.WriteLine({name}(new[] {{ {data} }}, {e['data'][0]}));",
        "clamp": f"Console.WriteLine({name}({k}, 10, 50));",
        "fib": f"Console.WriteLine({name}({k % 20}));",
        "describe": f"Console.WriteLine({name}(\"total\", {k}));",
        "divide": f"Console.WriteLine({name}({k}, {e['data'][0]}));",
        "counter": f"Console.WriteLine(new {name}({k}).Increment(1));",
    }[t]


def render_csharp(entries, index):
    out = ["using System;", "", "namespace Desk", "{", f"    public static class Module{index:02d}", "    {"]
    for e in entries:
        out.append(cs_task(e))
    out.append("        public static void Main()")
    out.append("        {")
    out.extend(cs_call(e) for e in entries)
    out.append("            Console.WriteLine(Math.PI);")
    out.append("        }")
    out.append("    }")
    out.append("}")
    return "\n".join(out) + "\n"


# ----------------------------------------------------------------------------
# Go

def go_task(e):
    name = camel(e["parts"])
    t, k = e["task"], e["k"]
    if t == "sum":
        return f"""func {name}(items []int) int {{
	total := 0
	for _, item := range items {{
		total += item
	}}
	return total
}}
"""
    if t == "max":
        return f"""func {name}(items []int) int {{
	best := items[0]
	for _, item := range items {{
		if item > best {{
			best = item
		}}
	}}
	return best
}}
"""
    if t == "count":
        return f"""func {name}(items []int, target int) int {{
	count := 0
	for _, item := range items {{
		if item == target {{
			count++
		}}
	}}
	return count
}}
"""
    if t == "clamp":
        return f"""func {name}(x, lo, hi int) int {{
	if x < lo {{
		return lo
	}} else if x > hi {{
		return hi
	}}
	return x
}}
"""
    if t == "fib":
        return f"""func {name}(n int) int {{
	a, b := 0, 1
	for i := 0; i < n; i++ {{
		a, b = b, a+b
	}}
	return a
}}
"""
    if t == "describe":
        return f"""func {name}(label string, value int) string {{
	text := fmt.Sprintf("%s: %d", label, value*{k})
	return strings.ToUpper(text)
}}
"""
    if t == "divide":
        return f"""func {name}(a, b int) (int, error) {{
	if b == 0 {{
		return {k}, errors.New("division by zero")
	}}
	return a / b, nil
}}
"""
    if t == "counter":
        cls = pascal(e["parts"])
        return f"""type {cls} struct {{
	value int
}}

func (c *{cls}) Increment(step int) int {{
	c.value += step
	return c.value
}}

func (c *{cls}) Reset() {{
	c.value = {k}
}}
"""


def go_call(e):
    name = camel(e["parts"])
    data = ", ".join(map(str, e["data"]))
    t, k = e["task"], e["k"]
    return "\t" + {
        "sum": f"fmt.Println({name}([]int{{{data}}}))",
        "max": f"fmt.Println({name}([]int{{{data}}}))",
        "count": f"fmt.Println({name}([]int{{{data}}}, {e['data'][0]}))",
        "clamp": f"fmt.Println({name}({k}, 10, 50))",
        "fib": f"fmt.Println({name}({k % 20}))",
        "describe": f"fmt.Println({name}(\"total\", {k}))",
        "divide": f"fmt.Println({name}({k}, {e['data'][0]}))",
        "counter": f"fmt.Println((&{pascal(e['parts'])}{{value: {k}}}).Increment(1))",
    }[t]


def render_go(entries):
    out = ["package main", "", "import (", '\t"errors"', '\t"fmt"', '\t"strings"', ")", ""]
    for e in entries:
        out.append(go_task(e))
    out.append("func main() {")
    out.extend(go_call(e) for e in entries)
    out.append("\t_ = errors.New")
    out.append("\t_ = strings.ToUpper")
    out.append("}")
    return "\n".join(out) + "\n"


# ----------------------------------------------------------------------------
# C

def c_task(e):
    name = snake(e["parts"])
    t, k = e["task"], e["k"]
    if t == "sum":
        return f"""int {name}(const int *items, size_t n)
{{
    int total = 0;
    for (size_t i = 0; i < n; i++) {{
        total += items[i];
    }}
    return total;
}}
"""
    if t == "max":
        return f"""int {name}(const int *items, size_t n)
{{
    int best = items[0];
    for (size_t i = 1; i < n; i++) {{
        if (items[i] > best) {{
            best = items[i];
        }}
    }}
    return best;
}}
"""
    if t == "count":
        return f"""int {name}(const int *items, size_t n, int target)
{{
    int count = 0;
    for (size_t i = 0; i < n; i++) {{
        if (items[i] == target) {{
            count++;
        }}
    }}
    return count;
}}
"""
    if t == "clamp":
        return f"""int {name}(int x, int lo, int hi)
{{
    if (x < lo) {{
        return lo;
    }} else if (x > hi) {{
        return hi;
    }}
    return x;
}}
"""
    if t == "fib":
        return f"""long {name}(int n)
{{
    long a = 0;
    long b = 1;
    for (int i = 0; i < n; i++) {{
        long next = a + b;
        a = b;
        b = next;
    }}
    return a;
}}
"""
    if t == "describe":
        return f"""void {name}(char *buf, size_t size, const char *label, int value)
{{
    snprintf(buf, size, "%s: %d", label, value * {k});
}}
"""
    if t == "divide":
        return f"""int {name}(int a, int b)
{{
    if (b == 0) {{
        return {k};
    }}
    return a / b;
}}
"""
    if t == "counter":
        s = snake(e["parts"])
        return f"""struct {s} {{
    int value;
}};

int {s}_increment(struct {s} *c, int step)
{{
    c->value += step;
    return c->value;
}}

void {s}_reset(struct {s} *c)
{{
    c->value = {k};
}}
"""


def c_call(e, i):
    name = snake(e["parts"])
    data = ", ".join(map(str, e["data"]))
    n = len(e["data"])
    t, k = e["task"], e["k"]
    arr = f"    int data{i}[] = {{{data}}};\n"
    return {
        "sum": arr + f"    printf(\"%d\\n\", {name}(data{i}, {n}));",
        "max": arr + f"    printf(\"%d\\n\", {name}(data{i}, {n}));",
        "count": arr + f"    printf(\"%d\\n\", {name}(data{i}, {n}, {e['data'][0]}));",
        "clamp": f"    printf(\"%d\\n\", {name}({k}, 10, 50));",
        "fib": f"    printf(\"%ld\\n\", {name}({k % 20}));",
        "describe": f"    {name}(buf, sizeof buf, \"total\", {k});\n    puts(buf);",
        "divide": f"    printf(\"%d\\n\", {name}({k}, {e['data'][0]}));",
        "counter": f"    struct {name} c{i} = {{{k}}};\n    printf(\"%d\\n\", {name}_increment(&c{i}, 1));",
    }[t]


def render_c(entries):
    out = ["#include <stddef.h>", "#include <stdio.h>", ""]
    for e in entries:
        out.append(c_task(e))
    out.append("int main(void)")
    out.append("{")
    out.append("    char buf[64];")
    out.extend(c_call(e, i) for i, e in enumerate(entries))
    out.append("    return 0;")
    out.append("}")
    return "\n".join(out) + "\n"


# ----------------------------------------------------------------------------
# C++

def cpp_task(e):
    name = camel(e["parts"])
    t, k = e["task"], e["k"]
    if t == "sum":
        return f"""template <typename T>
T {name}(const std::vector<T>& items) {{
    T total{{}};
    for (const auto& item : items) {{
        total += item;
    }}
    return total;
}}
"""
    if t == "max":
        return f"""template <typename T>
T {name}(const std::vector<T>& items) {{
    auto best = items.front();
    for (const auto& item : items) {{
        if (item > best) {{
            best = item;
        }}
    }}
    return best;
}}
"""
    if t == "count":
        return f"""std::size_t {name}(const std::vector<int>& items, int target) {{
    return static_cast<std::size_t>(std::count(items.begin(), items.end(), target));
}}
"""
    if t == "clamp":
        return f"""constexpr int {name}(int x, int lo, int hi) noexcept {{
    return x < lo ? lo : (x > hi ? hi : x);
}}
"""
    if t == "fib":
        return f"""std::uint64_t {name}(unsigned n) {{
    std::uint64_t a = 0;
    std::uint64_t b = 1;
    while (n-- > 0) {{
        std::swap(a, b);
        b += a;
    }}
    return a;
}}
"""
    if t == "describe":
        return f"""std::string {name}(const std::string& label, int value) {{
    std::ostringstream out;
    out << label << ": " << value * {k};
    return out.str();
}}
"""
    if t == "divide":
        return f"""int {name}(int a, int b) {{
    try {{
        if (b == 0) {{
            throw std::invalid_argument("division by zero");
        }}
        return a / b;
    }} catch (const std::exception& e) {{
        return {k};
    }}
}}
"""
    if t == "counter":
        cls = pascal(e["parts"])
        return f"""class {cls} {{
public:
    explicit {cls}(int start) : value_(start) {{}}

    int increment(int step) {{
        value_ += step;
        return value_;
    }}

    void reset() noexcept {{ value_ = {k}; }}

private:
    int value_;
}};
"""


def cpp_call(e):
    name = camel(e["parts"])
    data = ", ".join(map(str, e["data"]))
    t, k = e["task"], e["k"]
    return "    " + {
        "sum": f"std::cout << desk::{name}(std::vector<int>{{{data}}}) << '\\n';",
        "max": f"std::cout << desk::{name}(std::vector<int>{{{data}}}) << '\\n';",
        "count": f"std::cout << desk::{name}({{{data}}}, {e['data'][0]}) << '\\n';",
        "clamp": f"std::cout << desk::{name}({k}, 10, 50) << '\\n';",
        "fib": f"std::cout << desk::{name}({k % 20}u) << '\\n';",
        "describe": f"std::cout << desk::{name}(\"total\", {k}) << '\\n';",
        "divide": f"std::cout << desk::{name}({k}, {e['data'][0]}) << '\\n';",
        "counter": f"std::cout << desk::{pascal(e['parts'])}({k}).increment(1) << '\\n';",
    }[t]


def render_cpp(entries):
    out = [
        "#include <algorithm>", "#include <cstdint>", "#include <iostream>",
        "#include <sstream>", "#include <stdexcept>", "#include <string>",
        "#include <vector>", "", "namespace desk {", "",
    ]
    for e in entries:
        out.append(cpp_task(e))
    out.append("}  // namespace desk")
    out.append("")
    out.append("int main() {")
    out.extend(cpp_call(e) for e in entries)
    out.append("    return 0;")
    out.append("}")
    return "\n".join(out) + "\n"


# ----------------------------------------------------------------------------
# Ruby

def rb_task(e):
    name = snake(e["parts"])
    t, k = e["task"], e["k"]
    if t == "sum":
        return f"""def {name}(items)
  total = 0
  items.each do |item|
    total += item
  end
  total
end
"""
    if t == "max":
        return f"""def {name}(items)
  best = items.first
  items.each do |item|
    best = item if item > best
  end
  best
end
"""
    if t == "count":
        return f"""def {name}(items, target)
  count = 0
  items.each do |item|
    count += 1 if item == target
  end
  count
end
"""
    if t == "clamp":
        return f"""def {name}(x, lo, hi)
  if x < lo
    lo
  elsif x > hi
    hi
  else
    x
  end
end
"""
    if t == "fib":
        return f"""def {name}(n)
  a, b = 0, 1
  i = 0
  while i < n
    a, b = b, a + b
    i += 1
  end
  a
end
"""
    if t == "describe":
        return f"""def {name}(label, value)
  text = "#{{label}}: #{{value * {k}}}"
  text.upcase
end
"""
    if t == "divide":
        return f"""def {name}(a, b)
  a / b
rescue ZeroDivisionError
  {k}
end
"""
    if t == "counter":
        cls = pascal(e["parts"])
        return f"""class {cls}
  attr_reader :value

  def initialize(start)
    @value = start
  end

  def increment(step)
    @value += step
    @value
  end

  def reset
    @value = {k}
  end
end
"""


def rb_call(e):
    name = snake(e["parts"])
    data = ", ".join(map(str, e["data"]))
    t, k = e["task"], e["k"]
    return "  " + {
        "sum": f"puts {name}([{data}])",
        "max": f"puts {name}([{data}])",
        "count": f"puts {name}([{data}], {e['data'][0]})",
        "clamp": f"puts {name}({k}, 10, 50)",
        "fib": f"puts {name}({k % 20})",
        "describe": f"puts {name}(\"total\", {k})",
        "divide": f"puts {name}({k}, {e['data'][0]})",
        "counter": f"puts {pascal(e['parts'])}.new({k}).increment(1)",
    }[t]


def render_ruby(entries):
    out = ["require \"set\"", ""]
    for e in entries:
        out.append(rb_task(e))
    out.append("def main")
    out.extend(rb_call(e) for e in entries)
    out.append("  puts Set.new([1, 2]).size")
    out.append("end")
    out.append("")
    out.append("main if __FILE__ == $PROGRAM_NAME")
    return "\n".join(out) + "\n"


# ----------------------------------------------------------------------------
# Scala

def scala_task(e):
    name = camel(e["parts"])
    t, k = e["task"], e["k"]
    if t == "sum":
        return f"""  def {name}(items: Seq[Int]): Int = {{
    var total = 0
    for (item <- items) {{
      total += item
    }}
    total
  }}
"""
    if t == "max":
        return f"""  def {name}(items: Seq[Int]): Int = {{
    var best = items.head
    for (item <- items) {{
      if (item > best) {{
        best = item
      }}
    }}
    best
  }}
"""
    if t == "count":
        return f"""  def {name}(items: Seq[Int], target: Int): Int =
    items.count(item => item == target)
"""
    if t == "clamp":
        return f"""  def {name}(x: Int, lo: Int, hi: Int): Int =
    if (x < lo) lo
    else if (x > hi) hi
    else x
"""
    if t == "fib":
        return f"""  def {name}(n: Int): Long = {{
    var a = 0L
    var b = 1L
    var i = 0
    while (i < n) {{
      val next = a + b
      a = b
      b = next
      i += 1
    }}
    a
  }}
"""
    if t == "describe":
        return f"""  def {name}(label: String, value: Int): String =
    s"$label: ${{value * {k}}}".toUpperCase
"""
    if t == "divide":
        return f"""  def {name}(a: Int, b: Int): Int =
    try a / b
    catch {{
      case _: ArithmeticException => {k}
    }}
"""
    if t == "counter":
        cls = pascal(e["parts"])
        return f"""  class {cls}(start: Int) {{
    private var value = start

    def increment(step: Int): Int = {{
      value += step
      value
    }}

    def reset(): Unit = {{
      value = {k}
    }}
  }}
"""


def scala_call(e):
    name = camel(e["parts"])
    data = ", ".join(map(str, e["data"]))
    t, k = e["task"], e["k"]
    return "    " + {
        "sum": f"println({name}(Seq({data})))",
        "max": f"println({name}(Seq({data})))",
        "count": f"println({name}(Seq({data}), {e['data'][0]}))",
        "clamp": f"println({name}({k}, 10, 50))",
        "fib": f"println({name}({k % 20}))",
        "describe": f"println({name}(\"total\", {k}))",
        "divide": f"println({name}({k}, {e['data'][0]}))",
        "counter": f"println(new {pascal(e['parts'])}({k}).increment(1))",
    }[t]


def render_scala(entries, index):
    out = ["package desk", "", "import scala.math.Pi", "", f"object Module{index:02d} {{"]
    for e in entries:
        out.append(scala_task(e))
    out.append("  def main(args: Array[String]): Unit = {")
    out.extend(scala_call(e) for e in entries)
    out.append("    println(Pi)")
    out.append("  }")
    out.append("}")
    return "\n".join(out) + "\n"


LANGUAGES = [
    ("c", "C", ".c"),
    ("cpp", "C++", ".cpp"),
    ("csharp", "C#", ".cs"),
    ("go", "Go", ".go"),
    ("java", "Java", ".java"),
    ("javascript", "JavaScript", ".js"),
    ("python", "Python", ".py"),
    ("ruby", "Ruby", ".rb"),
    ("scala", "Scala", ".scala"),
    ("typescript", "TypeScript", ".ts"),
]


def render(slug, entries, index):
    if slug == "python":
        return render_python(entries)
    if slug == "javascript":
        return render_js(entries)
    if slug == "typescript":
        return render_js(entries, ts=True)
    if slug == "java":
        return render_java(entries, index)
    if slug == "csharp":
        return render_csharp(entries, index)
    if slug == "go":
        return render_go(entries)
    if slug == "c":
        return render_c(entries)
    if slug == "cpp":
        return render_cpp(entries)
    if slug == "ruby":
        return render_ruby(entries)
    if slug == "scala":
        return render_scala(entries, index)
    raise ValueError(slug)


def main():
    out_dir = sys.argv[1] if len(sys.argv) > 1 else os.path.join(
        os.path.dirname(__file__), "..", "corpus", "desk")
    count = int(sys.argv[2]) if len(sys.argv) > 2 else 50
    manifest = ["# path\tlanguage\tlicense"]
    for slug, name, ext in LANGUAGES:
        os.makedirs(os.path.join(out_dir, slug), exist_ok=True)
        for i in range(count):
            rel = f"{slug}/module_{i:02d}{ext}"
            with open(os.path.join(out_dir, rel), "w", newline="\n") as f:
                f.write(render(slug, plan(i), i))
            manifest.append(f"{rel}\t{name}\tMIT")
    with open(os.path.join(out_dir, "MANIFEST.tsv"), "w", newline="\n") as f:
        f.write("\n".join(manifest) + "\n")


if __name__ == "__main__":
    main()
