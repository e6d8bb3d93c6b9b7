package com.example.stats;

import java.util.HashMap;
import java.util.List;
import java.util.Map;
import org.springframework.web.bind.annotation.GetMapping;
import org.springframework.web.bind.annotation.PostMapping;
import org.springframework.web.bind.annotation.RequestBody;
import org.springframework.web.bind.annotation.RequestMapping;
import org.springframework.web.bind.annotation.RestController;

@RestController
@RequestMapping("/stats")
public class StatsController {

    @GetMapping("/scores")
    public Map<String, Double> scores() {
        return new HashMap<>();
    }

    @GetMapping("/groups")
    public Map<String, List<Member>> groups() {
        return new HashMap<>();
    }

    @GetMapping("/raw")
    public Map raw() {
        return new HashMap();
    }

    @PostMapping("/tags")
    public void tags(@RequestBody HashMap<String, String> tags) {
    }
}
