package com.example.codebin;

import org.springframework.web.bind.annotation.*;

@RestController
public class BrokenController {

    @GetMapping("/broken")
    public String broken( {
        return "never";
    }
